use alloc::vec::Vec;

use super::ball::Relations;
use crate::coxeter::CoxeterSystem;
use crate::error::{Error, Result};
use crate::gens::Gen;

/// Word-level right reversing on the braid presentation, with no normal
/// forms: `s⁻¹t` becomes `(t s t…)(s t s…)⁻¹`, both of length `m − 1`.
///
/// Artin presentations are complete for reversing, so `a ≺ b` holds iff
/// reversing `a⁻¹b` ends in a positive word, which is then the quotient.
pub struct Reverser {
    /// `m[s][t]`, zero for infinite labels.
    m: Vec<Vec<usize>>,
    max_steps: usize,
}

/// Signed letter: `(s, true)` is `s`, `(s, false)` is `s⁻¹`.
type Letter = (Gen, bool);

impl Reverser {
    pub fn new(sys: &CoxeterSystem, max_steps: usize) -> Self {
        let rel = Relations::new(sys);
        let mut m = alloc::vec![alloc::vec![0; rel.n]; rel.n];
        for (s, row) in rel.pairs.iter().enumerate() {
            for &(t, mst) in row {
                m[s][t] = mst;
            }
        }
        Reverser { m, max_steps }
    }

    /// Reverses `a⁻¹b` to `u v⁻¹`; `None` if an infinite label blocks it.
    pub fn reverse(&self, a: &[Gen], b: &[Gen]) -> Result<Option<(Vec<Gen>, Vec<Gen>)>> {
        let w: Vec<Letter> = a.iter().rev().map(|&s| (s, false)).chain(b.iter().map(|&s| (s, true))).collect();
        self.reverse_signed(w)
    }

    /// Reverses any signed word to `u v⁻¹`, the same group element.
    pub fn reverse_signed(&self, mut w: Vec<(Gen, bool)>) -> Result<Option<(Vec<Gen>, Vec<Gen>)>> {
        // every pattern lies at or after `from`: letters before it are positive
        let mut from = 0;
        let mut steps = 0;
        loop {
            let at = (from..w.len().saturating_sub(1)).find(|&i| !w[i].1 && w[i + 1].1);
            let Some(i) = at else { break };
            steps += 1;
            if steps > self.max_steps {
                return Err(Error::CapExceeded("reversing steps"));
            }
            let (s, t) = (w[i].0, w[i + 1].0);
            if s == t {
                w.drain(i..i + 2);
                from = i.saturating_sub(1);
                continue;
            }
            let m = self.m[s][t];
            if m == 0 {
                return Ok(None);
            }
            let alt = |x: Gen, y: Gen, j: usize| if j.is_multiple_of(2) { x } else { y };
            let pos = (0..m - 1).map(|j| (alt(t, s, j), true));
            let neg = (0..m - 1).rev().map(|j| (alt(s, t, j), false));
            w.splice(i..i + 2, pos.chain(neg));
            from = i.saturating_sub(1);
        }
        let split = w.iter().position(|l| !l.1).unwrap_or(w.len());
        let u = w[..split].iter().map(|l| l.0).collect();
        let v = w[split..].iter().rev().map(|l| l.0).collect();
        Ok(Some((u, v)))
    }

    /// `true` iff the signed word is trivial in the group: it reverses to
    /// `u v⁻¹` with `u = v` in the monoid. Needs a reversing-complete
    /// presentation with common multiples, e.g. spherical type.
    pub fn is_trivial(&self, w: Vec<(Gen, bool)>) -> Result<Option<bool>> {
        let Some((u, v)) = self.reverse_signed(w)? else { return Ok(None) };
        Ok(Some(u.len() == v.len() && self.left_divides(&u, &v)?))
    }

    /// The word `u` with `a·u = b` when `a ≺ b`.
    pub fn left_quotient(&self, a: &[Gen], b: &[Gen]) -> Result<Option<Vec<Gen>>> {
        Ok(self.reverse(a, b)?.and_then(|(u, v)| v.is_empty().then_some(u)))
    }

    pub fn left_divides(&self, a: &[Gen], b: &[Gen]) -> Result<bool> {
        Ok(self.left_quotient(a, b)?.is_some())
    }

    /// `b ≻ a` (`a` is a right divisor of `b`). The presentation is symmetric
    /// under word reversal.
    pub fn right_divides(&self, a: &[Gen], b: &[Gen]) -> Result<bool> {
        let rev = |w: &[Gen]| w.iter().rev().copied().collect::<Vec<_>>();
        self.left_divides(&rev(a), &rev(b))
    }

    /// `true` iff `l` is the least common right multiple of `a` and `b`:
    /// `l = a·u = b·v` with `u` and `v` sharing no last letter. If `l` were
    /// `lcm·w` with `w ≠ 1`, both quotients would end with `w`; conversely a
    /// shared last letter `x` makes `l·x⁻¹` a common multiple.
    pub fn is_lcm_left(&self, a: &[Gen], b: &[Gen], l: &[Gen]) -> Result<bool> {
        let (Some(u), Some(v)) = (self.left_quotient(a, l)?, self.left_quotient(b, l)?) else {
            return Ok(false);
        };
        for s in 0..self.m.len() {
            if self.right_divides(&[s], &u)? && self.right_divides(&[s], &v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Mirror of [`is_lcm_left`](Self::is_lcm_left) for least common left
    /// multiples, through word reversal.
    pub fn is_lcm_right(&self, a: &[Gen], b: &[Gen], l: &[Gen]) -> Result<bool> {
        let rev = |w: &[Gen]| w.iter().rev().copied().collect::<Vec<_>>();
        self.is_lcm_left(&rev(a), &rev(b), &rev(l))
    }
}
