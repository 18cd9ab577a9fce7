use alloc::vec;
use alloc::vec::Vec;

use crate::coxeter::{CoxeterSystem, Order};
use crate::error::{Error, Result};
use crate::gens::{Gen, GenSet};

/// Identifier of an element of a [`MonoidBall`]. Ids increase with length.
pub type ClassId = u32;

/// Limits on brute-force enumeration.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_rank: usize,
    pub max_radius: usize,
    pub max_words: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_rank: 5, max_radius: 8, max_words: 4_000_000 }
    }
}

/// Braid relations as rewrite data: `pairs[s]` lists `(t, m_{s,t})`.
#[derive(Clone, Debug)]
pub(crate) struct Relations {
    pub n: usize,
    pub pairs: Vec<Vec<(Gen, usize)>>,
}

impl Relations {
    pub fn new(sys: &CoxeterSystem) -> Self {
        let n = sys.rank();
        let pairs = (0..n)
            .map(|s| {
                (0..n)
                    .filter(|&t| t != s)
                    .filter_map(|t| match sys.m(s, t) {
                        Order::Finite(m) => Some((t, m as usize)),
                        Order::Infinite => None,
                    })
                    .collect()
            })
            .collect();
        Relations { n, pairs }
    }

    /// Calls `f` on every word obtained from `w` by one braid move.
    pub fn for_each_move(&self, w: &[Gen], mut f: impl FnMut(&[Gen])) {
        let mut buf = w.to_vec();
        for i in 0..w.len() {
            let s = w[i];
            for &(t, m) in &self.pairs[s] {
                if i + m > w.len() {
                    continue;
                }
                let alternates = (0..m).all(|j| w[i + j] == if j % 2 == 0 { s } else { t });
                if !alternates {
                    continue;
                }
                for j in 0..m {
                    buf[i + j] = if j % 2 == 0 { t } else { s };
                }
                f(&buf);
                buf[i..i + m].copy_from_slice(&w[i..i + m]);
            }
        }
    }
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let p = parent[x as usize];
        parent[x as usize] = parent[p as usize];
        x = p;
    }
    x
}

/// Every positive word of length at most `radius`, grouped into monoid
/// elements: the connected components of the braid-move graph.
///
/// Words of length `k` are indexed by `offset[k] + code`, where `code` reads
/// the word in base `|S|`; prefixes and suffixes are then plain integer
/// division and remainder.
#[derive(Clone, Debug)]
pub struct MonoidBall {
    pub(crate) rel: Relations,
    radius: usize,
    offsets: Vec<usize>,
    pows: Vec<usize>,
    class: Vec<ClassId>,
    class_len: Vec<u8>,
    class_start: Vec<usize>,
    members: Vec<u32>,
    length_start: Vec<ClassId>,
}

impl MonoidBall {
    pub fn enumerate(sys: &CoxeterSystem, radius: usize) -> Result<Self> {
        Self::enumerate_with(sys, radius, Caps::default())
    }

    pub fn enumerate_with(sys: &CoxeterSystem, radius: usize, caps: Caps) -> Result<Self> {
        let n = sys.rank();
        if n > caps.max_rank {
            return Err(Error::CapExceeded("rank"));
        }
        if radius > caps.max_radius {
            return Err(Error::CapExceeded("radius"));
        }
        let mut pows = vec![1usize];
        let mut offsets = vec![0usize];
        for _ in 0..=radius {
            let p = *pows.last().unwrap_or(&1);
            offsets.push(offsets.last().unwrap_or(&0) + p);
            pows.push(p.checked_mul(n.max(1)).ok_or(Error::CapExceeded("words"))?);
        }
        let total = offsets[radius + 1];
        if total > caps.max_words {
            return Err(Error::CapExceeded("words"));
        }
        let rel = Relations::new(sys);
        let mut parent: Vec<u32> = (0..total as u32).collect();
        let mut word = vec![0; radius];
        for k in 2..=radius {
            for code in 0..pows[k] {
                decode(code, n, &mut word[..k]);
                let me = (offsets[k] + code) as u32;
                rel.for_each_move(&word[..k], |w| {
                    let other = (offsets[k] + encode(w, n)) as u32;
                    let (a, b) = (find(&mut parent, me), find(&mut parent, other));
                    if a != b {
                        parent[a.max(b) as usize] = a.min(b);
                    }
                });
            }
        }
        // Roots are minimal indices, so numbering roots in index order sorts
        // classes by length and then by least member.
        let mut class = vec![ClassId::MAX; total];
        let mut class_len = Vec::new();
        let mut length_start = vec![0 as ClassId; radius + 2];
        let mut next: ClassId = 0;
        for k in 0..=radius {
            length_start[k] = next;
            for idx in offsets[k]..offsets[k + 1] {
                let r = find(&mut parent, idx as u32) as usize;
                if r == idx {
                    class[idx] = next;
                    class_len.push(k as u8);
                    next += 1;
                } else {
                    class[idx] = class[r];
                }
            }
        }
        length_start[radius + 1] = next;
        let count = next as usize;
        let mut class_start = vec![0usize; count + 1];
        for &c in &class {
            class_start[c as usize + 1] += 1;
        }
        for c in 0..count {
            class_start[c + 1] += class_start[c];
        }
        let mut fill = class_start.clone();
        let mut members = vec![0u32; total];
        for (idx, &c) in class.iter().enumerate() {
            members[fill[c as usize]] = idx as u32;
            fill[c as usize] += 1;
        }
        Ok(MonoidBall { rel, radius, offsets, pows, class, class_len, class_start, members, length_start })
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn rank(&self) -> usize {
        self.rel.n
    }

    pub fn class_count(&self) -> usize {
        self.class_len.len()
    }

    /// Number of elements of length exactly `k`.
    pub fn count_of_length(&self, k: usize) -> usize {
        (self.length_start[k + 1] - self.length_start[k]) as usize
    }

    /// Ids of all elements of length at most `k`: `0..classes_up_to(k)`.
    pub fn classes_up_to(&self, k: usize) -> ClassId {
        self.length_start[k.min(self.radius) + 1]
    }

    pub fn class_of(&self, word: &[Gen]) -> Option<ClassId> {
        if word.len() > self.radius || word.iter().any(|&s| s >= self.rel.n) {
            return None;
        }
        Some(self.class[self.offsets[word.len()] + encode(word, self.rel.n)])
    }

    pub fn len(&self, c: ClassId) -> usize {
        self.class_len[c as usize] as usize
    }

    fn word_at(&self, idx: u32) -> Vec<Gen> {
        let k = self.offsets.partition_point(|&o| o <= idx as usize) - 1;
        let mut w = vec![0; k];
        decode(idx as usize - self.offsets[k], self.rel.n, &mut w);
        w
    }

    /// Lexicographically least word of the class.
    pub fn rep(&self, c: ClassId) -> Vec<Gen> {
        self.word_at(self.members[self.class_start[c as usize]])
    }

    pub fn members(&self, c: ClassId) -> impl Iterator<Item = Vec<Gen>> + '_ {
        let (lo, hi) = (self.class_start[c as usize], self.class_start[c as usize + 1]);
        self.members[lo..hi].iter().map(move |&i| self.word_at(i))
    }

    fn member_codes(&self, c: ClassId) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.len(c);
        let (lo, hi) = (self.class_start[c as usize], self.class_start[c as usize + 1]);
        self.members[lo..hi].iter().map(move |&i| (k, i as usize - self.offsets[k]))
    }

    pub(crate) fn class_by_code(&self, k: usize, code: usize) -> ClassId {
        self.class[self.offsets[k] + code]
    }

    pub(crate) fn pow(&self, k: usize) -> usize {
        self.pows[k]
    }

    /// All `a` with `a ≺ c`, sorted.
    pub fn left_divisors(&self, c: ClassId) -> Vec<ClassId> {
        let mut out: Vec<ClassId> = self
            .member_codes(c)
            .flat_map(|(k, code)| (0..=k).map(move |j| self.class_by_code(j, code / self.pows[k - j])))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// All `a` with `c ≻ a`, sorted.
    pub fn right_divisors(&self, c: ClassId) -> Vec<ClassId> {
        let mut out: Vec<ClassId> = self
            .member_codes(c)
            .flat_map(|(k, code)| (0..=k).map(move |j| self.class_by_code(j, code % self.pows[j])))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn divides_left(&self, a: ClassId, c: ClassId) -> bool {
        let j = self.len(a);
        j <= self.len(c) && self.member_codes(c).any(|(k, code)| self.class_by_code(j, code / self.pows[k - j]) == a)
    }

    pub fn divides_right(&self, a: ClassId, c: ClassId) -> bool {
        let j = self.len(a);
        j <= self.len(c) && self.member_codes(c).any(|(_, code)| self.class_by_code(j, code % self.pows[j]) == a)
    }

    /// The greatest element of `set` for the order given by `divisors`, if any.
    fn greatest(&self, set: &[ClassId], divisors: impl Fn(ClassId) -> Vec<ClassId>) -> Option<ClassId> {
        let top = *set.iter().max_by_key(|&&c| self.len(c))?;
        let below = divisors(top);
        set.iter().all(|c| below.binary_search(c).is_ok()).then_some(top)
    }

    /// Greatest common left divisor, from the explicit divisor sets. `None`
    /// if the common divisors have no greatest element.
    pub fn gcd_left(&self, a: ClassId, b: ClassId) -> Option<ClassId> {
        let db = self.left_divisors(b);
        let common: Vec<ClassId> = self.left_divisors(a).into_iter().filter(|c| db.binary_search(c).is_ok()).collect();
        self.greatest(&common, |c| self.left_divisors(c))
    }

    pub fn gcd_right(&self, a: ClassId, b: ClassId) -> Option<ClassId> {
        let db = self.right_divisors(b);
        let common: Vec<ClassId> = self.right_divisors(a).into_iter().filter(|c| db.binary_search(c).is_ok()).collect();
        self.greatest(&common, |c| self.right_divisors(c))
    }

    /// A class is reduced iff no member word has two equal adjacent letters.
    pub fn is_reduced(&self, c: ClassId) -> bool {
        self.members(c).all(|w| w.windows(2).all(|p| p[0] != p[1]))
    }

    /// Greatest reduced left divisor.
    pub fn alpha(&self, c: ClassId) -> Option<ClassId> {
        let reduced: Vec<ClassId> = self.left_divisors(c).into_iter().filter(|&d| self.is_reduced(d)).collect();
        self.greatest(&reduced, |d| self.left_divisors(d))
    }

    /// Every `g` with `ℓ(g) ≤ max_len` and `g·X = Y·g`: each `x ∈ X` has a
    /// `y ∈ Y` with `y·g = g·x`, and these `y` exhaust `Y`.
    pub fn conjugators(&self, x: GenSet, y: GenSet, max_len: usize) -> Result<Vec<ClassId>> {
        if max_len + 1 > self.radius {
            return Err(Error::CapExceeded("conjugator length"));
        }
        let mut out = Vec::new();
        for g in 0..self.classes_up_to(max_len) {
            let word = self.rep(g);
            let mut image = GenSet::EMPTY;
            let mut ok = true;
            for s in x {
                let mut right = word.clone();
                right.push(s);
                let target = self.class_of(&right);
                let found = y.iter().find(|&t| {
                    let mut left = vec![t];
                    left.extend_from_slice(&word);
                    self.class_of(&left) == target
                });
                match found {
                    Some(t) => image.insert(t),
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok && image == y {
                out.push(g);
            }
        }
        Ok(out)
    }
}

pub(crate) fn encode(w: &[Gen], n: usize) -> usize {
    w.iter().fold(0, |acc, &s| acc * n + s)
}

pub(crate) fn decode(mut code: usize, n: usize, out: &mut [Gen]) {
    for slot in out.iter_mut().rev() {
        *slot = code % n;
        code /= n;
    }
}

/// Precomputed divisor sets of every element up to some length, for
/// repeated divisibility and gcd queries.
#[derive(Clone, Debug)]
pub struct DivisorIndex {
    left: Vec<Vec<ClassId>>,
    right: Vec<Vec<ClassId>>,
}

impl DivisorIndex {
    pub fn build(ball: &MonoidBall, radius: usize) -> Self {
        let count = ball.classes_up_to(radius);
        DivisorIndex {
            left: (0..count).map(|c| ball.left_divisors(c)).collect(),
            right: (0..count).map(|c| ball.right_divisors(c)).collect(),
        }
    }

    pub fn left_divisors(&self, c: ClassId) -> &[ClassId] {
        &self.left[c as usize]
    }

    pub fn right_divisors(&self, c: ClassId) -> &[ClassId] {
        &self.right[c as usize]
    }

    pub fn divides_left(&self, a: ClassId, c: ClassId) -> bool {
        self.left[c as usize].binary_search(&a).is_ok()
    }

    pub fn divides_right(&self, a: ClassId, c: ClassId) -> bool {
        self.right[c as usize].binary_search(&a).is_ok()
    }

    fn greatest_common(sets: &[Vec<ClassId>], a: ClassId, b: ClassId) -> Option<ClassId> {
        let (da, db) = (&sets[a as usize], &sets[b as usize]);
        let common: Vec<ClassId> = da.iter().copied().filter(|c| db.binary_search(c).is_ok()).collect();
        // ids grow with length, so the last common divisor is a longest one
        let top = *common.last()?;
        let below = &sets[top as usize];
        common.iter().all(|c| below.binary_search(c).is_ok()).then_some(top)
    }

    pub fn gcd_left(&self, a: ClassId, b: ClassId) -> Option<ClassId> {
        Self::greatest_common(&self.left, a, b)
    }

    pub fn gcd_right(&self, a: ClassId, b: ClassId) -> Option<ClassId> {
        Self::greatest_common(&self.right, a, b)
    }
}
