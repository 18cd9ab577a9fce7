use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use super::ops::{is_negative, reflect, with_ops, WeylOps, ROOT_EPS, SIGN_EPS};
use super::CoxeterSystem;
use crate::error::{Error, Result};
use crate::gens::{Gen, GenSet};

/// An element of `W_S`, stored as its ShortLex-least reduced word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoxeterElement {
    word: Vec<Gen>,
}

#[allow(clippy::len_without_is_empty)]
impl CoxeterElement {
    pub fn identity() -> Self {
        CoxeterElement { word: Vec::new() }
    }

    /// Wraps a word that is already canonical. Only for internal use by code
    /// that produced the word through a backend.
    pub(crate) fn from_canonical(word: Vec<Gen>) -> Self {
        CoxeterElement { word }
    }

    pub fn word(&self) -> &[Gen] {
        &self.word
    }

    /// Coxeter length `ℓ(w)`.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum RootSign {
    Positive,
    Negative,
    /// Only for vectors that are not roots.
    Mixed,
}

/// A vector of the geometric representation, in the simple-root basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Root {
    coords: Vec<f64>,
    sign: RootSign,
}

impl Root {
    pub fn new(coords: Vec<f64>) -> Self {
        let sign = if coords.iter().all(|&x| x >= -SIGN_EPS) {
            RootSign::Positive
        } else if coords.iter().all(|&x| x <= SIGN_EPS) {
            RootSign::Negative
        } else {
            RootSign::Mixed
        };
        Root { coords, sign }
    }

    pub fn simple(n: usize, s: Gen) -> Self {
        let mut coords = vec![0.0; n];
        coords[s] = 1.0;
        Root::new(coords)
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn sign(&self) -> RootSign {
        self.sign
    }

    pub fn neg(&self) -> Root {
        Root::new(self.coords.iter().map(|x| -x).collect())
    }

    /// Coordinatewise equality within [`ROOT_EPS`].
    pub fn approx_eq(&self, other: &Root) -> bool {
        self.coords.len() == other.coords.len()
            && self.coords.iter().zip(&other.coords).all(|(a, b)| libm::fabs(a - b) <= ROOT_EPS)
    }
}

/// One Deodhar factor `ν(X,s) = ω_{X(s)−{s}}·ω_{X(s)}` with its transport
/// data: `ν⁻¹·Π_X = Π_Y` and `X ∪ {s} = Y ∪ {t}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NuStep {
    pub origin: GenSet,
    pub letter: Gen,
    pub target: GenSet,
    /// The letter `t` leaving the subset.
    pub dropped: Gen,
    pub element: CoxeterElement,
}

impl CoxeterSystem {
    fn check_word(&self, word: &[Gen]) -> Result<()> {
        match word.iter().find(|&&s| s >= self.rank()) {
            Some(s) => Err(Error::UnknownGenerator(s.to_string())),
            None => Ok(()),
        }
    }

    /// Reduces an arbitrary word to its canonical ShortLex reduced form; the
    /// length of the result is `ℓ(w)`.
    pub fn element(&self, word: &[Gen]) -> Result<CoxeterElement> {
        self.check_word(word)?;
        Ok(with_ops!(self, ops => CoxeterElement::from_canonical(ops.word(&ops.from_word(word)))))
    }

    pub fn simple_reflection(&self, s: Gen) -> CoxeterElement {
        CoxeterElement::from_canonical(vec![s])
    }

    pub fn mul(&self, a: &CoxeterElement, b: &CoxeterElement) -> CoxeterElement {
        with_ops!(self, ops => {
            let w = ops.mul_word(&ops.from_word(&a.word), &b.word);
            CoxeterElement::from_canonical(ops.word(&w))
        })
    }

    pub fn inverse(&self, w: &CoxeterElement) -> CoxeterElement {
        let rev: Vec<Gen> = w.word.iter().rev().copied().collect();
        with_ops!(self, ops => CoxeterElement::from_canonical(ops.word(&ops.from_word(&rev))))
    }

    pub fn left_descents(&self, w: &CoxeterElement) -> GenSet {
        with_ops!(self, ops => ops.ldesc(&ops.from_word(&w.word)))
    }

    pub fn right_descents(&self, w: &CoxeterElement) -> GenSet {
        with_ops!(self, ops => ops.rdesc(&ops.from_word(&w.word)))
    }

    /// `a` is a prefix of `w` in the weak order: `ℓ(a⁻¹w) = ℓ(w) − ℓ(a)`.
    pub fn is_prefix(&self, a: &CoxeterElement, w: &CoxeterElement) -> bool {
        let q = self.mul(&self.inverse(a), w);
        q.len() + a.len() == w.len()
    }

    pub fn simple_root(&self, s: Gen) -> Root {
        Root::simple(self.rank(), s)
    }

    /// `word·v`, applying the rightmost letter first.
    pub(crate) fn apply_word(&self, word: &[Gen], v: &mut [f64]) {
        let n = self.rank();
        for &s in word.iter().rev() {
            reflect(self.form_matrix(), n, s, v);
        }
    }

    /// `w·v` in the reflection representation.
    pub fn act(&self, w: &CoxeterElement, v: &Root) -> Result<Root> {
        let n = self.rank();
        if v.coords.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: v.coords.len() });
        }
        let mut coords = v.coords.clone();
        self.apply_word(&w.word, &mut coords);
        Ok(Root::new(coords))
    }

    /// The generator `y` with `v ≈ e_y`, if any.
    pub(crate) fn as_simple_root(&self, v: &[f64]) -> Option<Gen> {
        let y = (0..v.len()).find(|&i| libm::fabs(v[i] - 1.0) <= ROOT_EPS)?;
        v.iter()
            .enumerate()
            .all(|(i, &x)| i == y || libm::fabs(x) <= ROOT_EPS)
            .then_some(y)
    }

    /// `w⁻¹·e_x` for `x ∈ X`, identified as simple roots. `None` when some
    /// image is not a (positive) simple root.
    fn pull_back_simple(&self, w: &CoxeterElement, x: GenSet) -> Option<GenSet> {
        let n = self.rank();
        let inv: Vec<Gen> = w.word.iter().rev().copied().collect();
        let mut image = GenSet::EMPTY;
        for s in x {
            let mut v = vec![0.0; n];
            v[s] = 1.0;
            self.apply_word(&inv, &mut v);
            image.insert(self.as_simple_root(&v)?);
        }
        Some(image)
    }

    /// `w⁻¹·Π_X = Π_Y` (as sets of roots).
    pub fn transports_pi(&self, w: &CoxeterElement, x: GenSet, y: GenSet) -> bool {
        x.len() == y.len() && self.pull_back_simple(w, x) == Some(y)
    }

    /// `ω_X`, the longest element of the finite parabolic subgroup `W_X`.
    pub fn longest_element(&self, x: GenSet) -> Result<CoxeterElement> {
        if !self.is_spherical(x) {
            return Err(Error::NotSpherical);
        }
        Ok(with_ops!(self, ops => {
            let mut w = ops.one();
            while let Some(s) = x.difference(ops.ldesc(&w)).first() {
                w = ops.lmul(s, &w);
            }
            CoxeterElement::from_canonical(ops.word(&w))
        }))
    }

    /// Deodhar's element `ν(X,s) = ω_{X(s)−{s}}·ω_{X(s)}` together with the
    /// subset `Y` it transports `X` to.
    pub fn nu(&self, x: GenSet, s: Gen) -> Result<NuStep> {
        if s >= self.rank() {
            return Err(Error::UnknownGenerator(s.to_string()));
        }
        if x.contains(s) {
            return Err(Error::PreconditionFailed("ν(X,s) needs s ∉ X"));
        }
        let comp = self.component_of(x, s);
        if !self.is_spherical(comp) {
            return Err(Error::ComponentNotSpherical { letter: s });
        }
        let element = self.mul(&self.longest_element(comp.without(s))?, &self.longest_element(comp)?);
        let target = self.pull_back_simple(&element, x).ok_or(Error::Internal("ν does not map Π_X to simple roots"))?;
        let dropped = x.with(s).difference(target);
        if target.len() != x.len() || dropped.len() != 1 {
            return Err(Error::Internal("ν target has the wrong shape"));
        }
        Ok(NuStep { origin: x, letter: s, target, dropped: dropped.first().unwrap_or(s), element })
    }

    /// Writes `w` (with `w⁻¹Π_X = Π_Y`) as `ν(X₀,s₀)⋯ν(X_k,s_k)` with `X₀ = X`,
    /// targets chaining to `Y` and lengths adding up to `ℓ(w)`. At each stage
    /// the least letter whose `ν` is a prefix of the remainder is used.
    pub fn deodhar_decompose(&self, w: &CoxeterElement, x: GenSet, y: GenSet) -> Result<Vec<NuStep>> {
        if !self.transports_pi(w, x, y) {
            return Err(Error::NotPiTransporter);
        }
        let mut steps = Vec::new();
        let mut cur = x;
        let mut rest = w.clone();
        while !rest.is_identity() {
            let mut chosen = None;
            for s in self.all().difference(cur) {
                if !self.is_spherical(self.component_of(cur, s)) {
                    continue;
                }
                let step = self.nu(cur, s)?;
                if self.is_prefix(&step.element, &rest) {
                    chosen = Some(step);
                    break;
                }
            }
            let step = chosen.ok_or(Error::Internal("no ν-prefix of a Π-transporter"))?;
            rest = self.mul(&self.inverse(&step.element), &rest);
            cur = step.target;
            steps.push(step);
        }
        if cur != y {
            return Err(Error::Internal("Deodhar chain ends at the wrong subset"));
        }
        Ok(steps)
    }

    /// Splits `w ∈ N_W(W_X)` as `w = g·u` with `g·Π_X = Π_X` and `u ∈ W_X`.
    pub fn normalizer_decompose_w(&self, w: &CoxeterElement, x: GenSet) -> Result<(CoxeterElement, CoxeterElement)> {
        let (g, u) = with_ops!(self, ops => {
            let mut g = ops.from_word(&w.word);
            let mut u_rev: Vec<Gen> = Vec::new();
            while let Some(s) = ops.rdesc(&g).intersection(x).first() {
                g = ops.rmul(&g, s);
                u_rev.push(s);
            }
            u_rev.reverse();
            (ops.word(&g), ops.word(&ops.from_word(&u_rev)))
        });
        let g = CoxeterElement::from_canonical(g);
        let u = CoxeterElement::from_canonical(u);
        // g·Π_X = Π_X  ⟺  (g⁻¹)⁻¹·Π_X = Π_X
        if self.transports_pi(&self.inverse(&g), x, x) {
            Ok((g, u))
        } else {
            Err(Error::NotInNormalizer)
        }
    }

    /// The root system `Φ = W·Π`, by orbit closure. Fails with
    /// [`Error::CapExceeded`] past `cap` roots (infinite systems).
    pub fn roots(&self, cap: usize) -> Result<Vec<Root>> {
        let n = self.rank();
        let mut roots: Vec<Root> = (0..n).map(|s| self.simple_root(s)).collect();
        let mut i = 0;
        while i < roots.len() {
            for s in 0..n {
                let mut v = roots[i].coords.clone();
                reflect(self.form_matrix(), n, s, &mut v);
                let r = Root::new(v);
                if !roots.iter().any(|q| q.approx_eq(&r)) {
                    if roots.len() >= cap {
                        return Err(Error::CapExceeded("root orbit"));
                    }
                    roots.push(r);
                }
            }
            i += 1;
        }
        Ok(roots)
    }

    /// `ℓ(w)` computed as the number of positive roots sent to negative ones.
    /// Independent of the descent-stripping canonical form; finite systems only.
    pub fn inversion_count(&self, w: &CoxeterElement, roots: &[Root]) -> usize {
        roots
            .iter()
            .filter(|r| r.sign == RootSign::Positive)
            .filter(|r| {
                let mut v = r.coords.clone();
                self.apply_word(&w.word, &mut v);
                is_negative(&v)
            })
            .count()
    }
}
