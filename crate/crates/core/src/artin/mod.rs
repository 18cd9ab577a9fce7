//! The positive Artin monoid `A_S⁺`.
//!
//! Elements are stored in left greedy (Adyan) normal form: the unique
//! sequence of reduced factors `g₁⋯g_n` with `g_i = α(g_i⋯g_n)`, where `α`
//! takes the greatest reduced left divisor. All operations go through
//! [`Monoid`], which borrows the ambient [`CoxeterSystem`]. Right-handed
//! operations are computed on reversed words.

mod engine;
mod reversing;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::coxeter::ops::{with_ops, WeylOps};
use crate::coxeter::{CoxeterElement, CoxeterSystem};
use crate::error::{Error, Result};
use crate::gens::{Gen, GenSet};
use engine::Engine;

/// A word over `S` without inverses.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PositiveWord {
    letters: Vec<Gen>,
}

impl PositiveWord {
    pub fn new(letters: Vec<Gen>) -> Self {
        PositiveWord { letters }
    }

    pub fn letters(&self) -> &[Gen] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &PositiveWord) -> PositiveWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        PositiveWord { letters }
    }
}

/// An element of `A_{S,red}`: the lift `π(w)` of some `w ∈ W_S`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedFactor {
    element: CoxeterElement,
}

// `is_identity` plays the role of `is_empty`
#[allow(clippy::len_without_is_empty)]
impl ReducedFactor {
    pub fn element(&self) -> &CoxeterElement {
        &self.element
    }

    pub fn word(&self) -> &[Gen] {
        self.element.word()
    }

    pub fn len(&self) -> usize {
        self.element.len()
    }

    pub fn is_identity(&self) -> bool {
        self.element.is_identity()
    }
}

/// An element of `A_S⁺` in Adyan normal form. The identity has no factors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositiveBraid {
    factors: Vec<ReducedFactor>,
}

// `is_identity` plays the role of `is_empty`
#[allow(clippy::len_without_is_empty)]
impl PositiveBraid {
    pub fn identity() -> Self {
        PositiveBraid::default()
    }

    pub fn factors(&self) -> &[ReducedFactor] {
        &self.factors
    }

    /// The monoid length `ℓ(g)`.
    pub fn len(&self) -> usize {
        self.factors.iter().map(ReducedFactor::len).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }

    /// Concatenated factor words: a canonical word for `g`.
    pub fn word(&self) -> Vec<Gen> {
        self.factors.iter().flat_map(|f| f.word().iter().copied()).collect()
    }

    /// Letters occurring in `g` (the same for every word representing it).
    pub fn support(&self) -> GenSet {
        self.factors.iter().flat_map(|f| f.word().iter().copied()).collect()
    }
}

/// An `s`-chain-`t`: a product `C₁⋯C_k` of simple chains, `C_i` running
/// from `letters[i-1]` to `letters[i]`. A simple chain from `a` is an
/// alternating word `b a b ⋯` with fewer than `m_{a,b}` letters, and its end
/// is the letter that would continue the alternation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub origin: Gen,
    pub target: Gen,
    /// `s₀ = origin, s₁, …, s_k = target`.
    pub letters: Vec<Gen>,
    pub simple_parts: Vec<Vec<Gen>>,
}

impl Chain {
    pub fn word(&self) -> Vec<Gen> {
        self.simple_parts.concat()
    }
}

/// Why [`Monoid::lcm_left`] returned no common multiple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NoCommonMultiple {
    /// Reversing met two letters with `m_{s,t} = ∞`: no common multiple exists.
    FreePair { s: Gen, t: Gen },
    /// No common multiple of length at most `bound` was found. Conclusive
    /// only for spherical systems, where the bound is provably sufficient.
    BoundExceeded { bound: usize },
}

impl fmt::Display for NoCommonMultiple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NoCommonMultiple::FreePair { s, t } => write!(f, "generators {s} and {t} have no common multiple"),
            NoCommonMultiple::BoundExceeded { bound } => write!(f, "no common multiple of length ≤ {bound}"),
        }
    }
}

/// Default lcm length bound for non-spherical systems.
pub const DEFAULT_LCM_BOUND: usize = 64;

/// Monoid operations over a fixed Coxeter system.
#[derive(Copy, Clone, Debug)]
pub struct Monoid<'a> {
    sys: &'a CoxeterSystem,
    lcm_bound: usize,
}

/// Runs `$body` with `$e` bound to an [`Engine`] over the system's backend.
macro_rules! with_engine {
    ($self:expr, $e:ident => $body:expr) => {
        with_ops!($self.sys, ops => {
            let $e = Engine::new(ops);
            $body
        })
    };
}

fn load<O: WeylOps>(e: &Engine<'_, O>, g: &PositiveBraid) -> Vec<O::Elem> {
    g.factors.iter().map(|f| e.ops.from_word(f.word())).collect()
}

/// Normal form of the reversed word of `g`.
fn load_reversed<O: WeylOps>(e: &Engine<'_, O>, g: &PositiveBraid) -> Vec<O::Elem> {
    let mut w = g.word();
    w.reverse();
    e.from_word(&w)
}

fn store<O: WeylOps>(e: &Engine<'_, O>, nf: &[O::Elem]) -> PositiveBraid {
    PositiveBraid {
        factors: nf
            .iter()
            .map(|f| ReducedFactor { element: CoxeterElement::from_canonical(e.ops.word(f)) })
            .collect(),
    }
}

impl<'a> Monoid<'a> {
    pub fn new(sys: &'a CoxeterSystem) -> Self {
        Monoid { sys, lcm_bound: DEFAULT_LCM_BOUND }
    }

    /// Sets the lcm length bound used for non-spherical systems.
    pub fn with_lcm_bound(mut self, bound: usize) -> Self {
        self.lcm_bound = bound;
        self
    }

    pub fn system(&self) -> &'a CoxeterSystem {
        self.sys
    }

    fn check(&self, word: &[Gen]) -> Result<()> {
        match word.iter().find(|&&s| s >= self.sys.rank()) {
            Some(s) => Err(Error::UnknownGenerator(alloc::format!("{s}"))),
            None => Ok(()),
        }
    }

    /// Adyan normal form of a word.
    pub fn braid(&self, word: &[Gen]) -> Result<PositiveBraid> {
        self.check(word)?;
        Ok(self.braid_unchecked(word))
    }

    pub(crate) fn braid_unchecked(&self, word: &[Gen]) -> PositiveBraid {
        with_engine!(self, e => store(&e, &e.from_word(word)))
    }

    pub fn canonicalize(&self, word: &PositiveWord) -> Result<PositiveBraid> {
        self.braid(word.letters())
    }

    pub fn parse(&self, text: &str) -> Result<PositiveBraid> {
        let word = self.sys.parse_word(text)?;
        Ok(self.braid_unchecked(&word))
    }

    pub fn letter(&self, s: Gen) -> PositiveBraid {
        PositiveBraid { factors: vec![ReducedFactor { element: self.sys.simple_reflection(s) }] }
    }

    /// `π(w)`.
    pub fn lift(&self, w: &CoxeterElement) -> PositiveBraid {
        if w.is_identity() {
            PositiveBraid::identity()
        } else {
            PositiveBraid { factors: vec![ReducedFactor { element: w.clone() }] }
        }
    }

    /// `p⁺(g)`.
    pub fn image(&self, g: &PositiveBraid) -> CoxeterElement {
        with_ops!(self.sys, ops => CoxeterElement::from_canonical(ops.word(&ops.from_word(&g.word()))))
    }

    /// Factors separated by ` . `, e.g. `s1 . s1 s2`.
    pub fn format(&self, g: &PositiveBraid) -> String {
        if g.is_identity() {
            return String::from("1");
        }
        let parts: Vec<String> = g.factors.iter().map(|f| self.sys.format_word(f.word())).collect();
        parts.join(" . ")
    }

    /// `α(g)`, the greatest reduced left divisor.
    pub fn alpha(&self, g: &PositiveBraid) -> ReducedFactor {
        g.factors.first().cloned().unwrap_or_default()
    }

    /// `ℓ(w) = ℓ(p⁺(w))`.
    pub fn is_reduced(&self, word: &[Gen]) -> bool {
        self.sys.element(word).map(|w| w.len() == word.len()).unwrap_or(false)
    }

    pub fn mul(&self, a: &PositiveBraid, b: &PositiveBraid) -> PositiveBraid {
        if a.is_identity() {
            return b.clone();
        }
        if b.is_identity() {
            return a.clone();
        }
        with_engine!(self, e => store(&e, &e.multiply(&load(&e, a), &load(&e, b))))
    }

    pub fn pow(&self, g: &PositiveBraid, n: usize) -> PositiveBraid {
        (0..n).fold(PositiveBraid::identity(), |acc, _| self.mul(&acc, g))
    }

    pub fn reverse(&self, g: &PositiveBraid) -> PositiveBraid {
        let mut w = g.word();
        w.reverse();
        self.braid_unchecked(&w)
    }

    /// `{s ∈ S : s ≺ g}`.
    pub fn left_letters(&self, g: &PositiveBraid) -> GenSet {
        g.factors.first().map_or(GenSet::EMPTY, |f| self.sys.left_descents(f.element()))
    }

    /// `{s ∈ S : g ≻ s}`.
    pub fn right_letters(&self, g: &PositiveBraid) -> GenSet {
        with_engine!(self, e => e.left_letters(&load_reversed(&e, g)))
    }

    /// Not left-divisible by any element of `X`.
    pub fn is_x_reduced(&self, g: &PositiveBraid, x: GenSet) -> bool {
        self.left_letters(g).intersection(x).is_empty()
    }

    /// Not right-divisible by any element of `X`.
    pub fn is_reduced_x(&self, g: &PositiveBraid, x: GenSet) -> bool {
        self.right_letters(g).intersection(x).is_empty()
    }

    /// `a⁻¹g` when `a ≺ g`.
    pub fn left_quotient(&self, a: &PositiveBraid, g: &PositiveBraid) -> Option<PositiveBraid> {
        if a.len() > g.len() {
            return None;
        }
        with_engine!(self, e => e.left_quotient(&load(&e, a), &load(&e, g)).map(|q| store(&e, &q)))
    }

    pub fn left_divides(&self, a: &PositiveBraid, g: &PositiveBraid) -> bool {
        self.left_quotient(a, g).is_some()
    }

    /// `g·a⁻¹` when `g ≻ a`.
    pub fn right_quotient(&self, a: &PositiveBraid, g: &PositiveBraid) -> Option<PositiveBraid> {
        if a.len() > g.len() {
            return None;
        }
        with_engine!(self, e => {
            let q = e.left_quotient(&load_reversed(&e, a), &load_reversed(&e, g))?;
            Some(store(&e, &e.reverse(&q)))
        })
    }

    pub fn right_divides(&self, a: &PositiveBraid, g: &PositiveBraid) -> bool {
        a.len() <= g.len()
            && with_engine!(self, e => e.left_quotient(&load_reversed(&e, a), &load_reversed(&e, g)).is_some())
    }

    pub fn gcd_left(&self, a: &PositiveBraid, b: &PositiveBraid) -> PositiveBraid {
        with_engine!(self, e => store(&e, &e.gcd_left(&load(&e, a), &load(&e, b))))
    }

    pub fn gcd_right(&self, a: &PositiveBraid, b: &PositiveBraid) -> PositiveBraid {
        with_engine!(self, e => store(&e, &e.reverse(&e.gcd_left(&load_reversed(&e, a), &load_reversed(&e, b)))))
    }

    fn lcm_bound_for(&self, a: &PositiveBraid, b: &PositiveBraid) -> usize {
        match self.sys.positive_root_count(self.sys.all()) {
            Some(roots) => (roots * (a.len() + b.len())).max(1),
            None => self.lcm_bound,
        }
    }

    /// Least common right multiple: the `≺`-least `m` with `a ≺ m` and `b ≺ m`.
    pub fn lcm_left(&self, a: &PositiveBraid, b: &PositiveBraid) -> Result<PositiveBraid, NoCommonMultiple> {
        let bound = self.lcm_bound_for(a, b);
        let (u, _) = reversing::complement(self.sys, &a.word(), &b.word(), bound)?;
        Ok(self.mul(a, &self.braid_unchecked(&u)))
    }

    /// Least common left multiple: the `≻`-least `m` with `m ≻ a` and `m ≻ b`.
    pub fn lcm_right(&self, a: &PositiveBraid, b: &PositiveBraid) -> Result<PositiveBraid, NoCommonMultiple> {
        let rev = |w: Vec<Gen>| w.into_iter().rev().collect::<Vec<_>>();
        let (ra, rb) = (rev(a.word()), rev(b.word()));
        let (u, _) = reversing::complement(self.sys, &ra, &rb, self.lcm_bound_for(a, b))?;
        // the lcm is the reversal of `ra·u`, that is `rev(u)·a`
        let mut word = rev(u);
        word.extend(a.word());
        Ok(self.braid_unchecked(&word))
    }

    /// `g = a·rest` with `a ∈ A_Y⁺` maximal, so `rest` is `Y`-reduced.
    pub fn parabolic_head_left(&self, g: &PositiveBraid, y: GenSet) -> (PositiveBraid, PositiveBraid) {
        with_engine!(self, e => {
            let (a, rest) = e.head_left(&load(&e, g), y);
            (store(&e, &a), store(&e, &rest))
        })
    }

    /// `g = rest·c` with `c ∈ A_Y⁺` maximal, so `rest` is reduced-`Y`.
    pub fn parabolic_head_right(&self, g: &PositiveBraid, y: GenSet) -> (PositiveBraid, PositiveBraid) {
        let (c, rest) = self.parabolic_head_left(&self.reverse(g), y);
        (self.reverse(&rest), self.reverse(&c))
    }

    /// When `s` does not left-divide `h`, writes `h = g·k` with `g` an
    /// `s`-chain-`t`. Returns `None` when `s ≺ h`.
    ///
    /// Each simple part is the longest alternating prefix `r u r ⋯` of the
    /// remainder, `u` the current origin and `r` the least letter dividing
    /// the remainder. Since alternating words shorter than `m_{u,r}` are
    /// always simple chains (also for `m_{u,r} = ∞`), the greedy never gets
    /// stuck and `k` is always trivial; it is returned for uniformity with
    /// the general statement.
    pub fn chain_decompose(&self, h: &PositiveBraid, s: Gen) -> Option<(Chain, PositiveBraid)> {
        with_engine!(self, e => {
            let mut rem = load(&e, h);
            if e.left_letters(&rem).contains(s) {
                return None;
            }
            let mut origin = s;
            let mut letters = vec![s];
            let mut parts = Vec::new();
            while !rem.is_empty() {
                let Some(r) = e.left_letters(&rem).first() else {
                    break;
                };
                let mut part = Vec::new();
                let mut next = r;
                while let Some(q) = e.strip_left(&rem, next) {
                    rem = q;
                    part.push(next);
                    next = if next == r { origin } else { r };
                }
                parts.push(part);
                origin = next;
                letters.push(next);
            }
            let chain = Chain { origin: s, target: origin, letters, simple_parts: parts };
            Some((chain, store(&e, &rem)))
        })
    }

    /// Letters `s₀ = t, s₁, …, s_n` with `s_{i-1}·g_i = g_i·s_i` along the
    /// Adyan factors of `g`, so `t·g = g·s_n`. `None` when `t·g ∉ g·S`.
    pub fn conjugate_through_factors(&self, g: &PositiveBraid, t: Gen) -> Option<Vec<Gen>> {
        with_engine!(self, e => {
            let mut letters = vec![t];
            let mut cur = t;
            for f in load(&e, g) {
                cur = e.conjugate_letter(&f, cur)?;
                letters.push(cur);
            }
            Some(letters)
        })
    }
}

#[cfg(test)]
mod tests;
