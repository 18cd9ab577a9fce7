use alloc::vec::Vec;

use super::{conjugator_extract, conjugator_source, is_positive_conjugator, ribbon_decompose, RibbonPath};
use crate::artin::PositiveBraid;
use crate::error::{Error, Result};
use crate::garside::{ArtinElement, Garside};
use crate::gens::{Gen, GenSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    Normalizer,
    PropClef,
    ParabolicContainment,
}

/// `g = y·x` with `y ∈ A_Y` and `x·X = R·x`, `R ⊆ Y`. The conjugator is
/// `x = b·Δ_S^{2n}`; `path` certifies the positive part `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizerWitness {
    pub kind: WitnessKind,
    pub y: ArtinElement,
    pub x: ArtinElement,
    /// `R`.
    pub target: GenSet,
    pub path: RibbonPath,
    /// `2n`.
    pub delta_exponent: i64,
}

fn letter(gs: &Garside<'_>, s: Gen) -> ArtinElement {
    gs.from_positive(&gs.monoid().letter(s))
}

/// `g·Δ_X²·g⁻¹ ∈ A_Y`, and if so the factorization `g = y·x`. Follows the
/// constructive argument: `g = h·Δ_S^{2n}`, `h = a·b·c` with `c ∈ A_X⁺`
/// the right `X`-head and `a ∈ A_Y⁺` the left `Y`-head of the rest, then
/// `y = a·b·c·b⁻¹` and `x = b·Δ_S^{2n}`.
pub fn prop_clef(gs: &Garside<'_>, g: &ArtinElement, x: GenSet, y: GenSet) -> Result<NormalizerWitness> {
    let m = gs.monoid();
    let dx2 = gs.from_positive(&m.pow(gs.data_for(x)?.delta(), 2));
    if !gs.in_parabolic(&gs.conjugate(g, &dx2), y) {
        return Err(Error::NotContained);
    }
    factor(gs, g, x, y, WitnessKind::PropClef)
}

fn factor(gs: &Garside<'_>, g: &ArtinElement, x: GenSet, y: GenSet, kind: WitnessKind) -> Result<NormalizerWitness> {
    let m = gs.monoid();
    let (h, n2) = gs.even_delta_power_form(g);
    let (rest, c) = m.parabolic_head_right(&h, x);
    let (a, b) = m.parabolic_head_left(&rest, y);
    let path = conjugator_extract(m, &b, x, y, 2)?;
    let bb = gs.from_positive(&b);
    let abc = gs.from_positive(&m.mul(&m.mul(&a, &b), &c));
    let yy = gs.mul(&abc, &bb.inverse());
    let xx = gs.mul(&bb, &gs.delta_power(n2));
    if !gs.in_parabolic(&yy, y) || &gs.mul(&yy, &xx) != g {
        return Err(Error::Internal("normalizer witness does not recompose"));
    }
    Ok(NormalizerWitness { kind, y: yy, x: xx, target: path.target(), path, delta_exponent: n2 })
}

/// `g·A_X·g⁻¹ ⊆ A_Y`, with `y ∈ A_Y` and `R ⊆ Y` such that
/// `g·A_X·g⁻¹ = y·A_R·y⁻¹`.
pub fn parabolic_contained(gs: &Garside<'_>, g: &ArtinElement, x: GenSet, y: GenSet) -> Result<Option<NormalizerWitness>> {
    match prop_clef(gs, g, x, y) {
        Ok(w) => Ok(Some(NormalizerWitness { kind: WitnessKind::ParabolicContainment, ..w })),
        Err(Error::NotContained) => Ok(None),
        Err(e) => Err(e),
    }
}

/// `g ∈ N(A_X)`, decided as `g·Δ_X^ε·g⁻¹ = Δ_X^ε`, with `g = a·q`,
/// `a ∈ A_X` and `q` in the quasi-centralizer of `A_X`.
pub fn normalizer_membership(gs: &Garside<'_>, g: &ArtinElement, x: GenSet) -> Result<Option<NormalizerWitness>> {
    let m = gs.monoid();
    let data = gs.data_for(x)?;
    let de = gs.from_positive(&m.pow(data.delta(), data.epsilon() as usize));
    if gs.conjugate(g, &de) != de {
        return Ok(None);
    }
    if gs.in_parabolic(g, x) {
        return Ok(Some(NormalizerWitness {
            kind: WitnessKind::Normalizer,
            y: g.clone(),
            x: ArtinElement::identity(),
            target: x,
            path: RibbonPath::empty(x),
            delta_exponent: 0,
        }));
    }
    let w = factor(gs, g, x, x, WitnessKind::Normalizer)?;
    if w.target != x {
        return Err(Error::Internal("quasi-centralizing part moves X"));
    }
    Ok(Some(w))
}

/// `g·A_X·g⁻¹ = A_X`, tested on generators in both directions.
pub fn normalizes(gs: &Garside<'_>, g: &ArtinElement, x: GenSet) -> bool {
    let inv = g.inverse();
    x.iter().all(|s| {
        let l = letter(gs, s);
        gs.in_parabolic(&gs.conjugate(g, &l), x) && gs.in_parabolic(&gs.conjugate(&inv, &l), x)
    })
}

/// `g·X = X·g`.
pub fn in_quasi_centralizer(gs: &Garside<'_>, g: &ArtinElement, x: GenSet) -> bool {
    x.iter().all(|t| x.iter().any(|s| group_conjugation_letters(gs, g, s, t).is_some()))
}

/// Decides `g·t = s·g` for `g = g₁·g₂⁻¹` in normal form: it holds iff
/// `t·g₂ = g₂·u` and `s·g₁ = g₁·u` for one letter `u`, which is returned.
pub fn group_conjugation_letters(gs: &Garside<'_>, g: &ArtinElement, s: Gen, t: Gen) -> Option<Gen> {
    let m = gs.monoid();
    let (g1, g2) = (g.numerator(), g.denominator());
    let u = *m.conjugate_through_factors(g2, t)?.last()?;
    (m.mul(&m.letter(s), g1) == m.mul(g1, &m.letter(u))).then_some(u)
}

/// `g = c·h` with `c` a product of powers of `Δ_{X_i}` over the components
/// `X_i` of `X` and `h = h₁·h₂⁻¹`, both parts positive `X`-ribbons-`X` that
/// no letter of `X` divides on either side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QzDecomposition {
    /// `(X_i, e_i)` for every component.
    pub central: Vec<(GenSet, i64)>,
    pub central_element: ArtinElement,
    pub h: ArtinElement,
    pub parts: (PositiveBraid, PositiveBraid),
    pub paths: (RibbonPath, RibbonPath),
}

pub fn qz_decompose(gs: &Garside<'_>, g: &ArtinElement, x: GenSet) -> Result<QzDecomposition> {
    if !in_quasi_centralizer(gs, g, x) {
        return Err(Error::NotInQuasiCentralizer);
    }
    let m = gs.monoid();
    let sys = gs.system();
    let comps = sys.components(x);
    let deltas: Vec<PositiveBraid> = comps.iter().map(|&c| gs.data_for(c).map(|d| d.delta().clone())).collect::<Result<_>>()?;
    let strip = |p: &PositiveBraid| {
        let mut p = p.clone();
        for d in &deltas {
            while let Some(q) = m.left_quotient(d, &p) {
                p = q;
            }
        }
        p
    };
    let (g1, g2) = (strip(g.numerator()), strip(g.denominator()));
    if !(m.left_letters(&g1).intersection(x).is_empty() && m.left_letters(&g2).intersection(x).is_empty()) {
        return Err(Error::Internal("stripping Δ powers left an X-divisible part"));
    }
    let h = gs.mul(&gs.from_positive(&g1), &gs.from_positive(&g2).inverse());
    let central_element = gs.mul(g, &h.inverse());
    let mut central = Vec::new();
    let mut rebuilt = ArtinElement::identity();
    for (&c, d) in comps.iter().zip(&deltas) {
        let count = |p: &PositiveBraid| p.word().iter().filter(|&&s| c.contains(s)).count() as i64;
        let e = (count(central_element.numerator()) - count(central_element.denominator())) / d.len() as i64;
        rebuilt = gs.mul(&rebuilt, &gs.pow(&gs.from_positive(d), e));
        central.push((c, e));
    }
    if rebuilt != central_element {
        return Err(Error::Internal("central part is not a product of Δ_{X_i} powers"));
    }
    // both parts go from the same X' to X; close them up into X-ribbons-X
    let source = conjugator_source(m, &g1, x).ok_or(Error::Internal("numerator is not a ribbon"))?;
    let parts = if source == x {
        (g1, g2)
    } else {
        let back = m.reverse(&g1);
        (m.mul(&g1, &back), m.mul(&g2, &back))
    };
    for p in [&parts.0, &parts.1] {
        let ok = is_positive_conjugator(m, p, x) == Some(x) && m.is_x_reduced(p, x) && m.is_reduced_x(p, x);
        if !ok {
            return Err(Error::Internal("H_X part is not a reduced X-ribbon-X"));
        }
    }
    let paths = (ribbon_decompose(m, &parts.0, x)?, ribbon_decompose(m, &parts.1, x)?);
    Ok(QzDecomposition { central, central_element, h, parts, paths })
}
