//! Ribbons: positive conjugators between parabolic subgroups.
//!
//! For `X, Y ⊆ S`, `Conj⁺(S;X,Y)` is the set of positive `g` with `gX = Yg`,
//! meaning that for every `x ∈ X` some `y ∈ Y` satisfies `g·x = y·g`. Every
//! such `g` is a product of elementary ribbons `d_{X,t}`; [`ribbon_decompose`]
//! finds one such product. The group-side results (normalizers, the
//! quasi-centralizer and the comparison with the Coxeter group) live in the
//! submodules and are re-exported here.

mod normalizer;
mod quotient;

pub use normalizer::{
    group_conjugation_letters, in_quasi_centralizer, normalizer_membership, normalizes, parabolic_contained,
    prop_clef, qz_decompose, NormalizerWitness, QzDecomposition, WitnessKind,
};
pub use quotient::{quotient_iso_check, QuotientReport};

use alloc::string::String;
use alloc::vec::Vec;

use crate::artin::{Monoid, PositiveBraid};
use crate::coxeter::CoxeterSystem;
use crate::error::{Error, Result};
use crate::gens::{Gen, GenSet};

/// The elementary ribbon `d_{X,t}`, a `Y`-ribbon-`X` with `Y·d = d·X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonStep {
    pub source: GenSet,
    pub letter: Gen,
    pub target: GenSet,
    pub element: PositiveBraid,
}

impl RibbonStep {
    /// `d[{s},t]`.
    pub fn format(&self, sys: &CoxeterSystem) -> String {
        alloc::format!("d[{},{}]", sys.format_set(self.source), sys.name(self.letter))
    }
}

/// Elementary ribbons `g₁, …, g_n` chaining `X = X₀ → X₁ → … → X_n`, with
/// product `g = g_n⋯g₁`. Steps are stored in the order they act: `g₁` first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonPath {
    source: GenSet,
    steps: Vec<RibbonStep>,
    product: PositiveBraid,
}

impl RibbonPath {
    pub fn empty(source: GenSet) -> Self {
        RibbonPath { source, steps: Vec::new(), product: PositiveBraid::identity() }
    }

    pub fn source(&self) -> GenSet {
        self.source
    }

    pub fn target(&self) -> GenSet {
        self.steps.last().map_or(self.source, |s| s.target)
    }

    pub fn steps(&self) -> &[RibbonStep] {
        &self.steps
    }

    pub fn product(&self) -> &PositiveBraid {
        &self.product
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Appends a step acting after the current ones.
    pub fn push(&mut self, monoid: &Monoid<'_>, step: RibbonStep) -> Result<()> {
        if step.source != self.target() {
            return Err(Error::Internal("ribbon steps do not chain"));
        }
        self.product = monoid.mul(&step.element, &self.product);
        self.steps.push(step);
        Ok(())
    }

    /// Steps in product order, `g_n ⋯ g₁`; `1` for the empty path.
    pub fn format(&self, sys: &CoxeterSystem) -> String {
        if self.steps.is_empty() {
            return String::from("1");
        }
        let parts: Vec<String> = self.steps.iter().rev().map(|s| s.format(sys)).collect();
        parts.join(" ")
    }
}

/// `d_{X,t}`: `Δ_{X(t)}·Δ_{X(t)−{t}}⁻¹` for `t ∉ X`, `Δ_{X(t)}` for `t ∈ X`,
/// where `X(t)` is the component of `X ∪ {t}` containing `t`.
pub fn elementary_ribbon(monoid: &Monoid<'_>, x: GenSet, t: Gen) -> Result<RibbonStep> {
    let sys = monoid.system();
    if t >= sys.rank() {
        return Err(Error::UnknownGenerator(alloc::format!("{t}")));
    }
    let comp = sys.component_of(x, t);
    if !sys.is_spherical(comp) {
        return Err(Error::ComponentNotSpherical { letter: t });
    }
    let top = sys.longest_element(comp)?;
    // ω_{X(t)}·ω_{X(t)−t} is reduced, so its lift is Δ_{X(t)}·Δ_{X(t)−t}⁻¹
    let w = if x.contains(t) { top } else { sys.mul(&top, &sys.longest_element(comp.without(t))?) };
    let element = monoid.lift(&w);
    let target = is_positive_conjugator(monoid, &element, x).ok_or(Error::Internal("d_{X,t} does not conjugate X"))?;
    Ok(RibbonStep { source: x, letter: t, target, element })
}

/// Pairs `(x, y)` with `g·x = y·g`, one per `x ∈ X`; `None` when some `x`
/// has no partner.
pub fn conjugation_pairs(monoid: &Monoid<'_>, g: &PositiveBraid, x: GenSet) -> Option<Vec<(Gen, Gen)>> {
    // g·x = y·g  ⟺  x·rev(g) = rev(g)·y
    let rev = monoid.reverse(g);
    x.iter().map(|s| monoid.conjugate_through_factors(&rev, s).and_then(|l| l.last().map(|&y| (s, y)))).collect()
}

/// `Y` with `g ∈ Conj⁺(S;X,Y)`, if any.
pub fn is_positive_conjugator(monoid: &Monoid<'_>, g: &PositiveBraid, x: GenSet) -> Option<GenSet> {
    conjugation_pairs(monoid, g, x).map(|pairs| pairs.into_iter().map(|(_, y)| y).collect())
}

/// `X` with `g ∈ Conj⁺(S;X,Y)`, given `Y`.
pub(crate) fn conjugator_source(monoid: &Monoid<'_>, g: &PositiveBraid, y: GenSet) -> Option<GenSet> {
    y.iter().map(|s| monoid.conjugate_through_factors(g, s).and_then(|l| l.last().copied())).collect()
}

/// Writes `g ∈ Conj⁺(S;X,Y)` as a product of elementary ribbons.
///
/// Works one Adyan factor at a time, starting from the right. A factor that
/// is right-divisible by some `t` of its source subset loses `Δ_{X(t)}`;
/// what is left maps `Π` of its source onto `Π` of its target in `W`, and
/// its Deodhar decomposition lifts factor by factor to elementary ribbons.
pub fn ribbon_decompose(monoid: &Monoid<'_>, g: &PositiveBraid, x: GenSet) -> Result<RibbonPath> {
    let y = is_positive_conjugator(monoid, g, x).ok_or(Error::NotAConjugator)?;
    let mut path = RibbonPath::empty(x);
    for f in g.factors().iter().rev() {
        let f = monoid.lift(f.element());
        decompose_simple(monoid, &f, &mut path)?;
    }
    if path.target() != y || &path.product != g {
        return Err(Error::Internal("ribbon decomposition does not recompose"));
    }
    Ok(path)
}

fn decompose_simple(monoid: &Monoid<'_>, f: &PositiveBraid, path: &mut RibbonPath) -> Result<()> {
    let sys = monoid.system();
    let src = path.target();
    let mut rest = f.clone();
    while let Some(t) = monoid.right_letters(&rest).intersection(src).first() {
        let step = elementary_ribbon(monoid, src, t)?;
        rest = monoid.right_quotient(&step.element, &rest).ok_or(Error::Internal("Δ_{X(t)} does not divide a ribbon"))?;
        path.push(monoid, step)?;
    }
    if rest.is_identity() {
        return Ok(());
    }
    let tgt = is_positive_conjugator(monoid, &rest, src).ok_or(Error::Internal("factor is not a ribbon"))?;
    // rest·Π_src = Π_tgt, i.e. p(rest)⁻¹·Π_tgt = Π_src
    let nus = sys.deodhar_decompose(&monoid.image(&rest), tgt, src)?;
    for nu in nus.iter().rev() {
        let step = elementary_ribbon(monoid, nu.target, nu.dropped)?;
        if step.target != nu.origin || monoid.image(&step.element) != nu.element {
            return Err(Error::Internal("ν does not lift to an elementary ribbon"));
        }
        path.push(monoid, step)?;
    }
    Ok(())
}

/// Peels elementary ribbons off a positive `g` that no letter of `X`
/// right-divides and with `g·Δ_X^k·g⁻¹ ∈ A_Y⁺`: the least `t ∈ S − X` with
/// `g ≻ t` gives `g = g'·d_{X,t}`, and the recursion continues on `g'` from
/// the target of `d_{X,t}`. The path ends in some `R ⊆ Y`.
pub fn conjugator_extract(monoid: &Monoid<'_>, g: &PositiveBraid, x: GenSet, y: GenSet, k: usize) -> Result<RibbonPath> {
    let sys = monoid.system();
    if !sys.is_spherical(x) {
        return Err(Error::PreconditionFailed("X is not spherical"));
    }
    if !monoid.is_reduced_x(g, x) {
        return Err(Error::PreconditionFailed("g is right-divisible by a letter of X"));
    }
    let dx = monoid.lift(&sys.longest_element(x)?);
    let conj = monoid.right_quotient(g, &monoid.mul(g, &monoid.pow(&dx, k)));
    if !conj.is_some_and(|z| z.support().is_subset(y)) {
        return Err(Error::PreconditionFailed("g·Δ_X^k·g⁻¹ is not in A_Y⁺"));
    }
    let mut path = RibbonPath::empty(x);
    let mut rest = g.clone();
    while !rest.is_identity() {
        let src = path.target();
        let t = monoid.right_letters(&rest).difference(src).first().ok_or(Error::Internal("remainder is not reduced"))?;
        let step = elementary_ribbon(monoid, src, t)?;
        rest = monoid.right_quotient(&step.element, &rest).ok_or(Error::Internal("g ≻ t without g ≻ d_{X,t}"))?;
        path.push(monoid, step)?;
    }
    if !path.target().is_subset(y) {
        return Err(Error::Internal("extracted path leaves Y"));
    }
    Ok(path)
}
