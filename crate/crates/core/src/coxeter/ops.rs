//! Two interchangeable backends for arithmetic in `W_S`.
//!
//! [`Geometric`] works for every system by tracking the matrices of `w` and
//! `w⁻¹` in the reflection representation. [`Table`] is a precomputed Cayley
//! table for small finite groups; the monoid algorithms are generic over
//! [`WeylOps`] and run on whichever backend the system carries.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use smallvec::{smallvec, SmallVec};

use super::CoxeterSystem;
use crate::gens::{Gen, GenSet};

/// Tolerance for the sign of a root coordinate.
pub const SIGN_EPS: f64 = 1e-9;
/// Tolerance when identifying two roots.
pub const ROOT_EPS: f64 = 1e-6;

pub(crate) trait WeylOps {
    type Elem: Clone;

    fn one(&self) -> Self::Elem;
    fn len(&self, w: &Self::Elem) -> usize;
    /// `{s : ℓ(s·w) < ℓ(w)}`
    fn ldesc(&self, w: &Self::Elem) -> GenSet;
    /// `{s : ℓ(w·s) < ℓ(w)}`
    fn rdesc(&self, w: &Self::Elem) -> GenSet;
    /// `s·w`
    fn lmul(&self, s: Gen, w: &Self::Elem) -> Self::Elem;
    /// `w·s`
    fn rmul(&self, w: &Self::Elem, s: Gen) -> Self::Elem;

    fn is_one(&self, w: &Self::Elem) -> bool {
        self.len(w) == 0
    }

    fn from_word(&self, word: &[Gen]) -> Self::Elem {
        word.iter().fold(self.one(), |w, &s| self.rmul(&w, s))
    }

    fn mul_word(&self, w: &Self::Elem, word: &[Gen]) -> Self::Elem {
        word.iter().fold(w.clone(), |w, &s| self.rmul(&w, s))
    }

    /// ShortLex-least reduced word: repeatedly strip the smallest left descent.
    fn word(&self, w: &Self::Elem) -> Vec<Gen> {
        let mut out = Vec::with_capacity(self.len(w));
        let mut cur = w.clone();
        while let Some(s) = self.ldesc(&cur).first() {
            out.push(s);
            cur = self.lmul(s, &cur);
        }
        out
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul_word(a, &self.word(b))
    }

    fn inverse(&self, w: &Self::Elem) -> Self::Elem {
        let mut word = self.word(w);
        word.reverse();
        self.from_word(&word)
    }
}

/// Sign of a root given in simple-root coordinates: decided by the coordinate
/// of largest magnitude (roots never mix signs).
pub(crate) fn is_negative(v: &[f64]) -> bool {
    let mut best = 0.0f64;
    for &x in v {
        if libm::fabs(x) > libm::fabs(best) {
            best = x;
        }
    }
    best < 0.0
}

/// Applies the simple reflection `s` to `v` in place:
/// `s·v = v − 2(v, e_s)e_s`.
pub(crate) fn reflect(form: &[f64], n: usize, s: Gen, v: &mut [f64]) {
    let mut dot = 0.0;
    for (u, &x) in v.iter().enumerate() {
        dot += x * form[u * n + s];
    }
    v[s] -= 2.0 * dot;
}

/// Matrices of `w` and `w⁻¹`, stored inline up to rank 4.
type Mats = SmallVec<[f64; 32]>;

#[derive(Clone, Debug)]
pub(crate) struct GeoElem {
    /// First `n²` entries: column `t` holds `w·e_t`. Next `n²`: column `t`
    /// holds `w⁻¹·e_t`.
    mats: Mats,
    len: usize,
}

impl GeoElem {
    fn fwd_col(&self, n: usize, t: Gen) -> &[f64] {
        &self.mats[t * n..(t + 1) * n]
    }

    fn inv_col(&self, n: usize, t: Gen) -> &[f64] {
        &self.mats[n * n + t * n..n * n + (t + 1) * n]
    }
}

pub(crate) struct Geometric<'a> {
    n: usize,
    form: &'a [f64],
}

impl<'a> Geometric<'a> {
    pub fn new(sys: &'a CoxeterSystem) -> Self {
        Geometric { n: sys.rank(), form: sys.form_matrix() }
    }

    /// Column update `col_t ← col_t − 2(e_t,e_s)·col_s`, i.e. right
    /// multiplication of the stored matrix by `s`.
    fn right_apply(&self, m: &mut [f64], s: Gen) {
        let n = self.n;
        for t in 0..n {
            let c = self.form[t * n + s];
            if t == s || c == 0.0 {
                continue;
            }
            for u in 0..n {
                m[t * n + u] -= 2.0 * c * m[s * n + u];
            }
        }
        for u in 0..n {
            m[s * n + u] = -m[s * n + u];
        }
    }

    fn left_apply(&self, m: &mut [f64], s: Gen) {
        let n = self.n;
        for t in 0..n {
            reflect(self.form, n, s, &mut m[t * n..(t + 1) * n]);
        }
    }

}

impl WeylOps for Geometric<'_> {
    type Elem = GeoElem;

    fn one(&self) -> GeoElem {
        let n = self.n;
        let mut mats: Mats = smallvec![0.0; 2 * n * n];
        for i in 0..n {
            mats[i * n + i] = 1.0;
            mats[n * n + i * n + i] = 1.0;
        }
        GeoElem { mats, len: 0 }
    }

    fn len(&self, w: &GeoElem) -> usize {
        w.len
    }

    fn ldesc(&self, w: &GeoElem) -> GenSet {
        let n = self.n;
        (0..n).filter(|&s| is_negative(w.inv_col(n, s))).collect()
    }

    fn rdesc(&self, w: &GeoElem) -> GenSet {
        let n = self.n;
        (0..n).filter(|&s| is_negative(w.fwd_col(n, s))).collect()
    }

    fn lmul(&self, s: Gen, w: &GeoElem) -> GeoElem {
        let n = self.n;
        let shorter = is_negative(w.inv_col(n, s));
        let mut out = w.clone();
        let (fwd, inv) = out.mats.split_at_mut(n * n);
        self.left_apply(fwd, s);
        self.right_apply(inv, s);
        out.len = if shorter { w.len - 1 } else { w.len + 1 };
        out
    }

    fn rmul(&self, w: &GeoElem, s: Gen) -> GeoElem {
        let n = self.n;
        let shorter = is_negative(w.fwd_col(n, s));
        let mut out = w.clone();
        let (fwd, inv) = out.mats.split_at_mut(n * n);
        self.right_apply(fwd, s);
        self.left_apply(inv, s);
        out.len = if shorter { w.len - 1 } else { w.len + 1 };
        out
    }
}

/// Cayley table of a finite `W_S`. Element `0` is the identity.
#[derive(Clone, Debug)]
pub struct Table {
    n: usize,
    words: Vec<Vec<Gen>>,
    lens: Vec<u32>,
    ldesc: Vec<GenSet>,
    rdesc: Vec<GenSet>,
    /// `lmul[w * n + s] = s·w`
    lmul: Vec<u32>,
    /// `rmul[w * n + s] = w·s`
    rmul: Vec<u32>,
    inv: Vec<u32>,
}

impl Table {
    /// Enumerates the group breadth-first by length. Callers guarantee the
    /// group is finite.
    pub(crate) fn build(sys: &CoxeterSystem) -> Table {
        let geo = Geometric::new(sys);
        let n = sys.rank();
        let mut index: BTreeMap<Vec<Gen>, u32> = BTreeMap::new();
        let mut elems = vec![geo.one()];
        let mut words: Vec<Vec<Gen>> = vec![Vec::new()];
        index.insert(Vec::new(), 0);
        let mut rmul: Vec<u32> = Vec::new();
        let mut i = 0;
        while i < elems.len() {
            for s in 0..n {
                let next = geo.rmul(&elems[i], s);
                let word = geo.word(&next);
                let id = match index.get(&word) {
                    Some(&id) => id,
                    None => {
                        let id = elems.len() as u32;
                        index.insert(word.clone(), id);
                        elems.push(next);
                        words.push(word);
                        id
                    }
                };
                rmul.push(id);
            }
            i += 1;
        }
        let size = elems.len();
        let lens: Vec<u32> = words.iter().map(|w| w.len() as u32).collect();
        let walk = |word: &[Gen]| word.iter().fold(0u32, |w, &s| rmul[w as usize * n + s]);
        let inv: Vec<u32> = words
            .iter()
            .map(|w| {
                let rev: Vec<Gen> = w.iter().rev().copied().collect();
                walk(&rev)
            })
            .collect();
        let mut lmul = vec![0u32; size * n];
        for w in 0..size {
            for s in 0..n {
                // s·w = (w⁻¹·s)⁻¹
                lmul[w * n + s] = inv[rmul[inv[w] as usize * n + s] as usize];
            }
        }
        let rdesc = (0..size)
            .map(|w| (0..n).filter(|&s| lens[rmul[w * n + s] as usize] < lens[w]).collect())
            .collect();
        let ldesc = (0..size)
            .map(|w| (0..n).filter(|&s| lens[lmul[w * n + s] as usize] < lens[w]).collect())
            .collect();
        Table { n, words, lens, ldesc, rdesc, lmul, rmul, inv }
    }

    pub fn order(&self) -> usize {
        self.words.len()
    }

    pub fn word_of(&self, id: u32) -> &[Gen] {
        &self.words[id as usize]
    }

    pub fn inverse_of(&self, id: u32) -> u32 {
        self.inv[id as usize]
    }

    pub fn longest(&self) -> u32 {
        (0..self.order() as u32).max_by_key(|&w| self.lens[w as usize]).unwrap_or(0)
    }
}

impl WeylOps for Table {
    type Elem = u32;

    fn one(&self) -> u32 {
        0
    }

    fn len(&self, w: &u32) -> usize {
        self.lens[*w as usize] as usize
    }

    fn ldesc(&self, w: &u32) -> GenSet {
        self.ldesc[*w as usize]
    }

    fn rdesc(&self, w: &u32) -> GenSet {
        self.rdesc[*w as usize]
    }

    fn lmul(&self, s: Gen, w: &u32) -> u32 {
        self.lmul[*w as usize * self.n + s]
    }

    fn rmul(&self, w: &u32, s: Gen) -> u32 {
        self.rmul[*w as usize * self.n + s]
    }

    fn word(&self, w: &u32) -> Vec<Gen> {
        self.words[*w as usize].clone()
    }

    fn inverse(&self, w: &u32) -> u32 {
        self.inv[*w as usize]
    }
}

/// Runs `$body` with `$ops` bound to the system's fastest backend.
macro_rules! with_ops {
    ($sys:expr, $ops:ident => $body:expr) => {{
        let sys: &$crate::coxeter::CoxeterSystem = $sys;
        match sys.table() {
            Some($ops) => $body,
            None => {
                let geo = $crate::coxeter::ops::Geometric::new(sys);
                let $ops = &geo;
                $body
            }
        }
    }};
}
pub(crate) use with_ops;
