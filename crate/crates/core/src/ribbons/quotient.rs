use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{is_positive_conjugator, ribbon_decompose, RibbonPath};
use crate::artin::PositiveBraid;
use crate::coxeter::{CoxeterElement, TABLE_CAP};
use crate::error::{Error, Result};
use crate::garside::{ArtinElement, Garside};
use crate::gens::GenSet;

/// The finite quotient `G_X / (Z_W(W_X) ∩ G_X)` and its lift into `H_X`.
#[derive(Clone, Debug)]
pub struct QuotientReport {
    /// `|G_X|`, where `G_X = {w : w·Π_X = Π_X}`.
    pub g_x_order: usize,
    /// `|Z_W(W_X) ∩ G_X|`.
    pub centralizer_order: usize,
    /// ShortLex-least coset representatives; the identity comes first.
    pub reps: Vec<CoxeterElement>,
    pub lifts: Vec<PositiveBraid>,
    pub paths: Vec<RibbonPath>,
    /// `table[i][j] = k` when `reps[i]·reps[j]` lies in the coset of `reps[k]`.
    pub table: Vec<Vec<usize>>,
    /// Individual checks that passed: the letter equivalence on each lift
    /// and generator pair, and the coset comparisons on the Artin side.
    pub checks: usize,
}

impl QuotientReport {
    pub fn order(&self) -> usize {
        self.reps.len()
    }
}

/// Enumerates `G_X` and its intersection with the centralizer of `W_X`,
/// lifts each coset representative through the positive lift, and checks
/// on the Artin side that the lifts are `X`-ribbons-`X` in `H_X`, that
/// `s·g = g·t ⟺ s·p(g) = p(g)·t` for `s, t ∈ X`, and that the lifts
/// multiply like the cosets modulo the centralizer of `A_X`.
pub fn quotient_iso_check(gs: &Garside<'_>, x: GenSet) -> Result<QuotientReport> {
    let sys = gs.system();
    let m = gs.monoid();
    let table = sys.table().ok_or(Error::NotEnumerable { order: sys.order(sys.all()), cap: TABLE_CAP as usize })?;
    let mut g_x: Vec<CoxeterElement> = (0..table.order() as u32)
        .map(|id| sys.element(table.word_of(id)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|w| sys.transports_pi(&sys.inverse(w), x, x))
        .collect();
    g_x.sort_by(|a, b| (a.len(), a.word()).cmp(&(b.len(), b.word())));
    let refl: Vec<CoxeterElement> = x.iter().map(|s| sys.simple_reflection(s)).collect();
    let centralizer: Vec<&CoxeterElement> =
        g_x.iter().filter(|w| refl.iter().all(|r| sys.mul(w, r) == sys.mul(r, w))).collect();

    // cosets w·K, each named by its least element
    let mut coset: BTreeMap<&CoxeterElement, usize> = BTreeMap::new();
    let mut reps: Vec<CoxeterElement> = Vec::new();
    for w in &g_x {
        if coset.contains_key(w) {
            continue;
        }
        let id = reps.len();
        reps.push(w.clone());
        for k in &centralizer {
            let wk = sys.mul(w, k);
            let member = g_x.iter().find(|v| **v == wk).ok_or(Error::Internal("G_X is not closed"))?;
            coset.insert(member, id);
        }
    }
    let class = |w: &CoxeterElement| g_x.iter().find(|v| *v == w).and_then(|v| coset.get(v).copied());
    let table: Vec<Vec<usize>> = reps
        .iter()
        .map(|a| reps.iter().map(|b| class(&sys.mul(a, b)).ok_or(Error::Internal("G_X is not closed"))).collect())
        .collect::<Result<_>>()?;

    let mut checks = 0;
    let lifts: Vec<PositiveBraid> = reps.iter().map(|w| m.lift(w)).collect();
    let mut paths = Vec::new();
    for (w, g) in reps.iter().zip(&lifts) {
        let ribbon = is_positive_conjugator(m, g, x) == Some(x) && m.is_x_reduced(g, x) && m.is_reduced_x(g, x);
        if !ribbon {
            return Err(Error::Internal("lift of G_X is not in H_X"));
        }
        for (s, rs) in x.iter().zip(&refl) {
            for (t, rt) in x.iter().zip(&refl) {
                let artin = m.mul(&m.letter(s), g) == m.mul(g, &m.letter(t));
                let coxeter = sys.mul(rs, w) == sys.mul(w, rt);
                if artin != coxeter {
                    return Err(Error::Internal("letter conjugation differs between A and W"));
                }
                checks += 1;
            }
        }
        paths.push(ribbon_decompose(m, g, x)?);
    }

    let elems: Vec<ArtinElement> = lifts.iter().map(|g| gs.from_positive(g)).collect();
    let centralizes = |g: &ArtinElement| {
        x.iter().all(|s| {
            let l = gs.from_positive(&m.letter(s));
            gs.conjugate(g, &l) == l
        })
    };
    for (i, a) in elems.iter().enumerate() {
        for (j, b) in elems.iter().enumerate() {
            let distinct = i == j || !centralizes(&gs.mul(a, &b.inverse()));
            let k = table[i][j];
            let product = centralizes(&gs.mul(&gs.mul(a, b), &elems[k].inverse()));
            if !(distinct && product) {
                return Err(Error::Internal("lifts do not realize the quotient"));
            }
            checks += 2;
        }
    }
    Ok(QuotientReport { g_x_order: g_x.len(), centralizer_order: centralizer.len(), reps, lifts, paths, table, checks })
}
