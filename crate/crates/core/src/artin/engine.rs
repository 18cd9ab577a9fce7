//! Normal-form arithmetic in `A_S⁺`, generic over the `W_S` backend.
//!
//! A monoid element is held as its left greedy normal form: a list of
//! nontrivial elements of `W_S`, each standing for its (unique) lift through
//! the section `π`.

use alloc::vec::Vec;

use crate::coxeter::ops::WeylOps;
use crate::gens::{Gen, GenSet};

pub(crate) struct Engine<'a, O: WeylOps> {
    pub ops: &'a O,
}

pub(crate) type Nf<E> = Vec<E>;

impl<'a, O: WeylOps> Engine<'a, O> {
    pub fn new(ops: &'a O) -> Self {
        Engine { ops }
    }

    pub fn letter(&self, s: Gen) -> O::Elem {
        self.ops.lmul(s, &self.ops.one())
    }

    /// For simple `x`, `h`: returns `(x·c, r)` with `h = c·r` and `c` the
    /// longest prefix of `h` keeping `x·c` reduced.
    fn absorb(&self, x: &O::Elem, h: &O::Elem) -> (O::Elem, O::Elem) {
        let ops = self.ops;
        let mut xd = x.clone();
        let mut rem = h.clone();
        while let Some(u) = ops.ldesc(&rem).difference(ops.rdesc(&xd)).first() {
            xd = ops.rmul(&xd, u);
            rem = ops.lmul(u, &rem);
        }
        (xd, rem)
    }

    /// Normal form of `x·g` for a simple `x`.
    pub fn prepend(&self, x: O::Elem, nf: &[O::Elem]) -> Nf<O::Elem> {
        let mut out = Vec::with_capacity(nf.len() + 1);
        let mut carry = x;
        for (i, f) in nf.iter().enumerate() {
            if self.ops.is_one(&carry) {
                out.extend_from_slice(&nf[i..]);
                return out;
            }
            let (head, rest) = self.absorb(&carry, f);
            out.push(head);
            carry = rest;
        }
        if !self.ops.is_one(&carry) {
            out.push(carry);
        }
        out
    }

    pub fn from_word(&self, word: &[Gen]) -> Nf<O::Elem> {
        let mut nf = Vec::new();
        for &s in word.iter().rev() {
            nf = self.prepend(self.letter(s), &nf);
        }
        nf
    }

    pub fn word(&self, nf: &[O::Elem]) -> Vec<Gen> {
        nf.iter().flat_map(|f| self.ops.word(f)).collect()
    }

    pub fn multiply(&self, a: &[O::Elem], b: &[O::Elem]) -> Nf<O::Elem> {
        let mut nf = b.to_vec();
        for f in a.iter().rev() {
            nf = self.prepend(f.clone(), &nf);
        }
        nf
    }

    /// Letters `s` with `s ≺ g`.
    pub fn left_letters(&self, nf: &[O::Elem]) -> GenSet {
        nf.first().map_or(GenSet::EMPTY, |f| self.ops.ldesc(f))
    }

    /// `s⁻¹·g`, when `s ≺ g`.
    pub fn strip_left(&self, nf: &[O::Elem], s: Gen) -> Option<Nf<O::Elem>> {
        let first = nf.first()?;
        if !self.ops.ldesc(first).contains(s) {
            return None;
        }
        let first = self.ops.lmul(s, first);
        if self.ops.is_one(&first) {
            Some(nf[1..].to_vec())
        } else {
            Some(self.prepend(first, &nf[1..]))
        }
    }

    /// `a⁻¹·g`, when `a ≺ g`.
    pub fn left_quotient(&self, a: &[O::Elem], g: &[O::Elem]) -> Option<Nf<O::Elem>> {
        let mut cur = g.to_vec();
        for s in self.word(a) {
            cur = self.strip_left(&cur, s)?;
        }
        Some(cur)
    }

    pub fn gcd_left(&self, a: &[O::Elem], b: &[O::Elem]) -> Nf<O::Elem> {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        let mut common = Vec::new();
        while let Some(s) = self.left_letters(&a).intersection(self.left_letters(&b)).first() {
            a = self.strip_left(&a, s).unwrap_or_default();
            b = self.strip_left(&b, s).unwrap_or_default();
            common.push(s);
        }
        self.from_word(&common)
    }

    pub fn reverse(&self, nf: &[O::Elem]) -> Nf<O::Elem> {
        let mut w = self.word(nf);
        w.reverse();
        self.from_word(&w)
    }

    /// Greatest left divisor lying in `A_Y⁺`, and the cofactor.
    pub fn head_left(&self, nf: &[O::Elem], y: GenSet) -> (Nf<O::Elem>, Nf<O::Elem>) {
        let mut rest = nf.to_vec();
        let mut head = Vec::new();
        while let Some(s) = self.left_letters(&rest).intersection(y).first() {
            rest = self.strip_left(&rest, s).unwrap_or_default();
            head.push(s);
        }
        (self.from_word(&head), rest)
    }

    /// `u` with `t·f = f·u` for one simple factor `f`, if it exists.
    pub fn conjugate_letter(&self, f: &O::Elem, t: Gen) -> Option<Gen> {
        // t·f = f·u in A⁺ iff u = f⁻¹tf in W: when t ∤ f both sides are the
        // lifts of one reduced element, otherwise cancel t and argue on t⁻¹f
        let ops = self.ops;
        let u = ops.mul(&ops.inverse(f), &ops.lmul(t, f));
        if ops.len(&u) == 1 {
            ops.word(&u).first().copied()
        } else {
            None
        }
    }
}
