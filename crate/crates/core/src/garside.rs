//! Garside structure of spherical type: `Δ_X`, the diagram automorphism it
//! induces, and group elements in right normal form `a·b⁻¹`.
//!
//! Group elements are only offered when the ambient system is spherical.
//! Non-spherical systems keep the monoid operations of [`crate::artin`].

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::artin::{Monoid, PositiveBraid};
use crate::coxeter::CoxeterSystem;
use crate::error::{Error, Result};
use crate::gens::{Gen, GenSet};

/// `Δ_X` together with `σ`, conjugation by `Δ_X` on `X`, and `ε ∈ {1, 2}`
/// minimal with `Δ_X^ε` central in `A_X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GarsideData {
    subset: GenSet,
    delta: PositiveBraid,
    /// `sigma[x]` for every generator; the identity outside `X`.
    sigma: Vec<Gen>,
    epsilon: u8,
}

impl GarsideData {
    /// Errors with [`Error::NotSpherical`] unless `W_X` is finite.
    pub fn new(sys: &CoxeterSystem, x: GenSet) -> Result<Self> {
        let w0 = sys.longest_element(x)?;
        let delta = Monoid::new(sys).lift(&w0);
        let mut sigma: Vec<Gen> = (0..sys.rank()).collect();
        for s in x {
            // ω_X is an involution, so Δ_X·s·Δ_X⁻¹ maps to ω_X·s·ω_X
            let image = sys.mul(&sys.mul(&w0, &sys.simple_reflection(s)), &w0);
            match image.word() {
                [t] if x.contains(*t) => sigma[s] = *t,
                _ => return Err(Error::Internal("conjugation by the longest element left X")),
            }
        }
        let epsilon = if x.iter().all(|s| sigma[s] == s) { 1 } else { 2 };
        Ok(GarsideData { subset: x, delta, sigma, epsilon })
    }

    pub fn subset(&self) -> GenSet {
        self.subset
    }

    pub fn delta(&self) -> &PositiveBraid {
        &self.delta
    }

    pub fn sigma(&self, s: Gen) -> Gen {
        self.sigma[s]
    }

    pub fn epsilon(&self) -> u8 {
        self.epsilon
    }

    /// `σ(g)`, with `Δ_X·g = σ(g)·Δ_X`.
    pub fn conj_by_delta(&self, monoid: &Monoid<'_>, g: &PositiveBraid) -> Result<PositiveBraid> {
        if !g.support().is_subset(self.subset) {
            return Err(Error::SupportOutsideSubset);
        }
        let word: Vec<Gen> = g.word().into_iter().map(|s| self.sigma[s]).collect();
        monoid.braid(&word)
    }
}

/// A word in `S ∪ S⁻¹`: `(s, true)` is `s`, `(s, false)` is `s⁻¹`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SignedWord(pub Vec<(Gen, bool)>);

impl SignedWord {
    pub fn positive(word: &[Gen]) -> Self {
        SignedWord(word.iter().map(|&s| (s, true)).collect())
    }

    /// Names separated by spaces, `'` marking an inverse: `s1 s2' s1`. A lone
    /// `1` is the empty word.
    pub fn parse(sys: &CoxeterSystem, text: &str) -> Result<Self> {
        if text.trim() == "1" && sys.gen("1").is_err() {
            return Ok(SignedWord::default());
        }
        text.split_whitespace()
            .map(|tok| match tok.strip_suffix('\'') {
                Some(name) => Ok((sys.gen(name)?, false)),
                None => Ok((sys.gen(tok)?, true)),
            })
            .collect::<Result<Vec<_>>>()
            .map(SignedWord)
    }

    pub fn format(&self, sys: &CoxeterSystem) -> String {
        if self.0.is_empty() {
            return String::from("1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(s, pos)| if pos { String::from(sys.name(s)) } else { alloc::format!("{}'", sys.name(s)) })
            .collect();
        parts.join(" ")
    }

    pub fn inverse(&self) -> Self {
        SignedWord(self.0.iter().rev().map(|&(s, pos)| (s, !pos)).collect())
    }
}

/// Group element `a·b⁻¹` with `a`, `b` positive and no common nontrivial right
/// divisor. This right normal form is unique, so equality is equality of the
/// pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArtinElement {
    num: PositiveBraid,
    den: PositiveBraid,
}

impl ArtinElement {
    pub fn identity() -> Self {
        ArtinElement::default()
    }

    pub fn numerator(&self) -> &PositiveBraid {
        &self.num
    }

    pub fn denominator(&self) -> &PositiveBraid {
        &self.den
    }

    pub fn is_identity(&self) -> bool {
        self.num.is_identity() && self.den.is_identity()
    }

    pub fn is_positive(&self) -> bool {
        self.den.is_identity()
    }

    /// `a⁻¹` written `b·a⁻¹` keeps the normal form.
    pub fn inverse(&self) -> Self {
        ArtinElement { num: self.den.clone(), den: self.num.clone() }
    }
}

/// Group arithmetic in a spherical `A_S`.
pub struct Garside<'a> {
    monoid: Monoid<'a>,
    data: GarsideData,
}

impl fmt::Debug for Garside<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Garside").field("data", &self.data).finish()
    }
}

impl<'a> Garside<'a> {
    pub fn new(sys: &'a CoxeterSystem) -> Result<Self> {
        let data = GarsideData::new(sys, sys.all())?;
        Ok(Garside { monoid: Monoid::new(sys), data })
    }

    pub fn system(&self) -> &'a CoxeterSystem {
        self.monoid.system()
    }

    pub fn monoid(&self) -> &Monoid<'a> {
        &self.monoid
    }

    /// Garside data of the whole of `S`.
    pub fn data(&self) -> &GarsideData {
        &self.data
    }

    /// Garside data of a spherical `X ⊆ S`.
    pub fn data_for(&self, x: GenSet) -> Result<GarsideData> {
        GarsideData::new(self.system(), x)
    }

    pub fn delta(&self) -> &PositiveBraid {
        &self.data.delta
    }

    /// `a·b⁻¹` put in normal form by cancelling `a ∧_≻ b`.
    pub fn fraction(&self, a: &PositiveBraid, b: &PositiveBraid) -> ArtinElement {
        let m = &self.monoid;
        let d = m.gcd_right(a, b);
        if d.is_identity() {
            return ArtinElement { num: a.clone(), den: b.clone() };
        }
        let quotient = |g: &PositiveBraid| m.right_quotient(&d, g).unwrap_or_default();
        ArtinElement { num: quotient(a), den: quotient(b) }
    }

    pub fn from_positive(&self, g: &PositiveBraid) -> ArtinElement {
        ArtinElement { num: g.clone(), den: PositiveBraid::identity() }
    }

    pub fn group_from_word(&self, w: &SignedWord) -> Result<ArtinElement> {
        let rank = self.system().rank();
        if let Some(&(s, _)) = w.0.iter().find(|&&(s, _)| s >= rank) {
            return Err(Error::UnknownGenerator(alloc::format!("{s}")));
        }
        let mut g = ArtinElement::identity();
        for &(s, pos) in &w.0 {
            let letter = self.monoid.letter(s);
            g = if pos {
                self.mul(&g, &self.from_positive(&letter))
            } else {
                // a·b⁻¹·s⁻¹ = a·(s·b)⁻¹
                self.fraction(&g.num, &self.monoid.mul(&letter, &g.den))
            };
        }
        Ok(g)
    }

    pub fn parse(&self, text: &str) -> Result<ArtinElement> {
        self.group_from_word(&SignedWord::parse(self.system(), text)?)
    }

    /// `a·b⁻¹` as a signed word.
    pub fn word(&self, g: &ArtinElement) -> SignedWord {
        let mut w = SignedWord::positive(&g.num.word());
        w.0.extend(SignedWord::positive(&g.den.word()).inverse().0);
        w
    }

    pub fn format(&self, g: &ArtinElement) -> String {
        self.word(g).format(self.system())
    }

    /// `(a·b⁻¹)(c·d⁻¹) = a·c'·(d·b')⁻¹` where `b·c' = c·b' = lcm(b, c)`.
    pub fn mul(&self, g: &ArtinElement, h: &ArtinElement) -> ArtinElement {
        let m = &self.monoid;
        let l = m.lcm_left(&g.den, &h.num).expect("spherical monoids have all lcms");
        let c1 = m.left_quotient(&g.den, &l).expect("lcm is a multiple");
        let b1 = m.left_quotient(&h.num, &l).expect("lcm is a multiple");
        self.fraction(&m.mul(&g.num, &c1), &m.mul(&h.den, &b1))
    }

    pub fn pow(&self, g: &ArtinElement, n: i64) -> ArtinElement {
        let base = if n < 0 { g.inverse() } else { g.clone() };
        (0..n.unsigned_abs()).fold(ArtinElement::identity(), |acc, _| self.mul(&acc, &base))
    }

    /// `h·g·h⁻¹`.
    pub fn conjugate(&self, h: &ArtinElement, g: &ArtinElement) -> ArtinElement {
        self.mul(&self.mul(h, g), &h.inverse())
    }

    /// `Δ_S^n`.
    pub fn delta_power(&self, n: i64) -> ArtinElement {
        let d = self.monoid.pow(&self.data.delta, n.unsigned_abs() as usize);
        if n < 0 {
            ArtinElement { num: PositiveBraid::identity(), den: d }
        } else {
            self.from_positive(&d)
        }
    }

    /// `g = g₁·Δ_S^n` with `g₁` positive and `n` maximal, i.e. `Δ_S` does not
    /// right-divide `g₁`.
    pub fn delta_power_form(&self, g: &ArtinElement) -> (PositiveBraid, i64) {
        let m = &self.monoid;
        let delta = &self.data.delta;
        // b is a product of k simple factors, each dividing Δ, so b ≺ Δ^k and
        // b⁻¹ = (b⁻¹Δ^k)·Δ^{-k}
        let k = g.den.factors().len();
        let dk = m.pow(delta, k);
        let c = m.left_quotient(&g.den, &dk).expect("b divides Δ^k");
        let mut g1 = m.mul(&g.num, &c);
        let mut n = -(k as i64);
        while let Some(q) = m.right_quotient(delta, &g1) {
            g1 = q;
            n += 1;
        }
        (g1, n)
    }

    /// Same as [`delta_power_form`](Self::delta_power_form) but with `n` even.
    pub fn even_delta_power_form(&self, g: &ArtinElement) -> (PositiveBraid, i64) {
        let (g1, n) = self.delta_power_form(g);
        if n % 2 == 0 {
            (g1, n)
        } else {
            (self.monoid.mul(&g1, &self.data.delta), n - 1)
        }
    }

    /// Left normal form `c⁻¹·d` with `c ∧_≺ d = 1`, read off the right normal
    /// form of the reversed element.
    pub fn left_form(&self, g: &ArtinElement) -> (PositiveBraid, PositiveBraid) {
        let m = &self.monoid;
        // rev(a·b⁻¹) = rev(b)⁻¹·rev(a) = a'·b'⁻¹, so g = rev(b')⁻¹·rev(a')
        let rb = self.from_positive(&m.reverse(&g.den)).inverse();
        let r = self.mul(&rb, &self.from_positive(&m.reverse(&g.num)));
        (m.reverse(&r.den), m.reverse(&r.num))
    }

    /// `true` iff `g ∈ A_X`: both parts of the right normal form lie in `A_X⁺`.
    pub fn in_parabolic(&self, g: &ArtinElement, x: GenSet) -> bool {
        g.num.support().is_subset(x) && g.den.support().is_subset(x)
    }
}

#[cfg(test)]
mod tests;
