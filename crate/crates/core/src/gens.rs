use core::fmt;

/// Index of a generator in a [`CoxeterSystem`](crate::CoxeterSystem).
///
/// The declared order of the generators is the ShortLex order used for every
/// canonical word in the crate.
pub type Gen = usize;

/// Subset of the generators, as a bitmask. Ranks above 64 are rejected when a
/// system is built.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenSet(u64);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        GenSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, …, n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            GenSet(u64::MAX)
        } else {
            GenSet((1u64 << n) - 1)
        }
    }

    pub const fn singleton(s: Gen) -> Self {
        GenSet(1u64 << s)
    }

    pub const fn contains(self, s: Gen) -> bool {
        s < 64 && self.0 & (1u64 << s) != 0
    }

    pub fn insert(&mut self, s: Gen) {
        self.0 |= 1u64 << s;
    }

    pub fn remove(&mut self, s: Gen) {
        self.0 &= !(1u64 << s);
    }

    pub const fn with(self, s: Gen) -> Self {
        GenSet(self.0 | (1u64 << s))
    }

    pub const fn without(self, s: Gen) -> Self {
        GenSet(self.0 & !(1u64 << s))
    }

    pub const fn union(self, other: GenSet) -> Self {
        GenSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: GenSet) -> Self {
        GenSet(self.0 & other.0)
    }

    pub const fn difference(self, other: GenSet) -> Self {
        GenSet(self.0 & !other.0)
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn is_subset(self, other: GenSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest member, i.e. the ShortLex-least generator.
    pub const fn first(self) -> Option<Gen> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as Gen)
        }
    }

    pub fn iter(self) -> GenSetIter {
        GenSetIter(self.0)
    }

    /// All subsets of `self`, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = GenSet> {
        let full = self.0;
        let mut next = Some(0u64);
        core::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some(cur.wrapping_sub(full) & full) };
            Some(GenSet(cur))
        })
    }
}

impl FromIterator<Gen> for GenSet {
    fn from_iter<I: IntoIterator<Item = Gen>>(iter: I) -> Self {
        let mut set = GenSet::EMPTY;
        for s in iter {
            set.insert(s);
        }
        set
    }
}

impl IntoIterator for GenSet {
    type Item = Gen;
    type IntoIter = GenSetIter;

    fn into_iter(self) -> GenSetIter {
        self.iter()
    }
}

pub struct GenSetIter(u64);

impl Iterator for GenSetIter {
    type Item = Gen;

    fn next(&mut self) -> Option<Gen> {
        if self.0 == 0 {
            return None;
        }
        let s = self.0.trailing_zeros() as Gen;
        self.0 &= self.0 - 1;
        Some(s)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for GenSetIter {}

impl fmt::Debug for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
