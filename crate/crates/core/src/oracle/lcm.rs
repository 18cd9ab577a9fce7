use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use super::ball::{ClassId, MonoidBall, Relations};
use crate::coxeter::CoxeterSystem;
use crate::error::{Error, Result};
use crate::gens::Gen;

/// Outcome of a brute-force lcm search inside a ball.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum LcmAnswer {
    Found(ClassId),
    /// No common multiple of length at most the given radius.
    NoneWithin(usize),
    /// Several common multiples of minimal length: the lattice property
    /// fails, which would be a bug in the ball.
    Ambiguous,
}

/// For each element of length at most `small_radius`, the bitset of its
/// right (resp. left) multiples inside the ball.
pub struct LcmIndex<'b> {
    ball: &'b MonoidBall,
    small: usize,
    words: usize,
    right_multiples: Vec<u64>,
    left_multiples: Vec<u64>,
}

impl<'b> LcmIndex<'b> {
    pub fn build(ball: &'b MonoidBall, small_radius: usize) -> Self {
        let small_radius = small_radius.min(ball.radius());
        let small = ball.classes_up_to(small_radius) as usize;
        let words = ball.class_count().div_ceil(64);
        let mut right_multiples = vec![0u64; small * words];
        let mut left_multiples = vec![0u64; small * words];
        for k in 0..=ball.radius() {
            for code in 0..ball.pow(k) {
                let c = ball.class_by_code(k, code) as usize;
                let (slot, bit) = (c / 64, 1u64 << (c % 64));
                for j in 0..=k.min(small_radius) {
                    let a = ball.class_by_code(j, code / ball.pow(k - j)) as usize;
                    right_multiples[a * words + slot] |= bit;
                    let b = ball.class_by_code(j, code % ball.pow(j)) as usize;
                    left_multiples[b * words + slot] |= bit;
                }
            }
        }
        LcmIndex { ball, small, words, right_multiples, left_multiples }
    }

    fn first_common(&self, table: &[u64], a: ClassId, b: ClassId) -> LcmAnswer {
        let (a, b) = (a as usize, b as usize);
        assert!(a < self.small && b < self.small, "lcm operands outside the small ball");
        let ra = &table[a * self.words..(a + 1) * self.words];
        let rb = &table[b * self.words..(b + 1) * self.words];
        let mut found: Option<ClassId> = None;
        for (i, (x, y)) in ra.iter().zip(rb).enumerate() {
            let mut both = x & y;
            while both != 0 {
                let c = (i * 64 + both.trailing_zeros() as usize) as ClassId;
                match found {
                    None => found = Some(c),
                    Some(f) if self.ball.len(c) == self.ball.len(f) => return LcmAnswer::Ambiguous,
                    Some(f) => return LcmAnswer::Found(f),
                }
                both &= both - 1;
            }
        }
        match found {
            Some(f) => LcmAnswer::Found(f),
            None => LcmAnswer::NoneWithin(self.ball.radius()),
        }
    }

    /// Least common right multiple (`a ≺ m`, `b ≺ m`).
    pub fn lcm_left(&self, a: ClassId, b: ClassId) -> LcmAnswer {
        self.first_common(&self.right_multiples, a, b)
    }

    /// Least common left multiple (`m ≻ a`, `m ≻ b`).
    pub fn lcm_right(&self, a: ClassId, b: ClassId) -> LcmAnswer {
        self.first_common(&self.left_multiples, a, b)
    }
}

/// All words equal to `word` in the monoid, encoded in base `|S|`, found by
/// closing under braid moves. Fails past `cap` words.
fn word_class(rel: &Relations, word: &[Gen], cap: usize) -> Result<BTreeSet<u128>> {
    let n = rel.n as u128;
    let encode = |w: &[Gen]| w.iter().fold(0u128, |acc, &s| acc * n + s as u128);
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(encode(word));
    queue.push_back(word.to_vec());
    while let Some(w) = queue.pop_front() {
        let mut fresh = Vec::new();
        rel.for_each_move(&w, |v| {
            if seen.insert(encode(v)) {
                fresh.push(v.to_vec());
            }
        });
        if seen.len() > cap {
            return Err(Error::CapExceeded("word class"));
        }
        queue.extend(fresh);
    }
    Ok(seen)
}

/// Checks that `l` is the least common right multiple of `a` and `b` using
/// only word classes: `a ≺ l`, `b ≺ l`, and no `l·x⁻¹` is a common multiple.
/// Sound because common multiples are closed under right multiplication, so
/// a smaller one would divide some `l·x⁻¹`.
pub fn verify_lcm_left(sys: &CoxeterSystem, a: &[Gen], b: &[Gen], l: &[Gen], cap: usize) -> Result<bool> {
    let rel = Relations::new(sys);
    let n = rel.n as u128;
    let class_l = word_class(&rel, l, cap)?;
    let class_a = word_class(&rel, a, cap)?;
    let class_b = word_class(&rel, b, cap)?;
    let divides = |small: &BTreeSet<u128>, len_small: usize, big: &[u128], len_big: usize| {
        len_small <= len_big && {
            let q = n.pow((len_big - len_small) as u32);
            big.iter().any(|w| small.contains(&(w / q)))
        }
    };
    let class_l: Vec<u128> = class_l.into_iter().collect();
    let len = l.len();
    if !divides(&class_a, a.len(), &class_l, len) || !divides(&class_b, b.len(), &class_l, len)
    {
        return Ok(false);
    }
    for x in 0..rel.n as u128 {
        if len == 0 {
            break;
        }
        let shorter: Vec<u128> = class_l.iter().filter(|&&w| w % n == x).map(|&w| w / n).collect();
        if shorter.is_empty() {
            continue;
        }
        if divides(&class_a, a.len(), &shorter, len - 1) && divides(&class_b, b.len(), &shorter, len - 1)
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Mirror of [`verify_lcm_left`] for least common left multiples.
pub fn verify_lcm_right(sys: &CoxeterSystem, a: &[Gen], b: &[Gen], l: &[Gen], cap: usize) -> Result<bool> {
    let rev = |w: &[Gen]| w.iter().rev().copied().collect::<Vec<_>>();
    verify_lcm_left(sys, &rev(a), &rev(b), &rev(l), cap)
}

/// `true` iff the two words are equal in the monoid.
pub fn words_equal(sys: &CoxeterSystem, u: &[Gen], v: &[Gen], cap: usize) -> Result<bool> {
    if u.len() != v.len() {
        return Ok(false);
    }
    let rel = Relations::new(sys);
    let n = rel.n as u128;
    let code = v.iter().fold(0u128, |acc, &s| acc * n + s as u128);
    Ok(word_class(&rel, u, cap)?.contains(&code))
}
