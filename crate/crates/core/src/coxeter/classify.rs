//! Recognition of finite irreducible Coxeter diagrams.

use alloc::vec::Vec;
use core::fmt;

use super::{CoxeterSystem, Order};
use crate::gens::{Gen, GenSet};

/// Irreducible finite Coxeter types. Rank-two diagrams with `m = 3, 4` are
/// reported as `A(2)` and `B(2)`; every other dihedral group is `I2(m)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum FiniteType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    I2(u32),
}

impl FiniteType {
    pub fn rank(self) -> usize {
        match self {
            FiniteType::A(n) | FiniteType::B(n) | FiniteType::D(n) | FiniteType::E(n) | FiniteType::H(n) => n,
            FiniteType::F4 => 4,
            FiniteType::I2(_) => 2,
        }
    }

    pub fn order(self) -> u128 {
        fn factorial(n: usize) -> u128 {
            (1..=n as u128).product()
        }
        match self {
            FiniteType::A(n) => factorial(n + 1),
            FiniteType::B(n) => (1u128 << n) * factorial(n),
            FiniteType::D(n) => (1u128 << (n - 1)) * factorial(n),
            FiniteType::E(6) => 51_840,
            FiniteType::E(7) => 2_903_040,
            FiniteType::E(_) => 696_729_600,
            FiniteType::F4 => 1_152,
            FiniteType::H(3) => 120,
            FiniteType::H(_) => 14_400,
            FiniteType::I2(m) => 2 * m as u128,
        }
    }

    pub fn positive_roots(self) -> usize {
        match self {
            FiniteType::A(n) => n * (n + 1) / 2,
            FiniteType::B(n) => n * n,
            FiniteType::D(n) => n * (n - 1),
            FiniteType::E(6) => 36,
            FiniteType::E(7) => 63,
            FiniteType::E(_) => 120,
            FiniteType::F4 => 24,
            FiniteType::H(3) => 15,
            FiniteType::H(_) => 60,
            FiniteType::I2(m) => m as usize,
        }
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteType::A(n) => write!(f, "A{n}"),
            FiniteType::B(n) => write!(f, "B{n}"),
            FiniteType::D(n) => write!(f, "D{n}"),
            FiniteType::E(n) => write!(f, "E{n}"),
            FiniteType::F4 => f.write_str("F4"),
            FiniteType::H(n) => write!(f, "H{n}"),
            FiniteType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// Classifies one connected component of the Coxeter graph (edges where
/// `m ≠ 2`). Returns `None` when `W_C` is infinite.
pub(crate) fn classify_component(sys: &CoxeterSystem, comp: GenSet) -> Option<FiniteType> {
    let verts: Vec<Gen> = comp.iter().collect();
    let n = verts.len();
    match n {
        0 => return None,
        1 => return Some(FiniteType::A(1)),
        2 => {
            return match sys.m(verts[0], verts[1]) {
                Order::Infinite => None,
                Order::Finite(3) => Some(FiniteType::A(2)),
                Order::Finite(4) => Some(FiniteType::B(2)),
                Order::Finite(m) => Some(FiniteType::I2(m)),
            }
        }
        _ => {}
    }

    let mut edges = 0usize;
    let mut special: Option<(Gen, Gen, u32)> = None;
    for (i, &s) in verts.iter().enumerate() {
        for &t in &verts[i + 1..] {
            match sys.m(s, t) {
                Order::Infinite => return None,
                Order::Finite(2) => {}
                Order::Finite(3) => edges += 1,
                Order::Finite(m) => {
                    if m >= 6 || special.is_some() {
                        return None;
                    }
                    special = Some((s, t, m));
                    edges += 1;
                }
            }
        }
    }
    // connected with n-1 edges: a tree
    if edges != n - 1 {
        return None;
    }
    let neighbours = |v: Gen| comp.iter().filter(move |&u| u != v && sys.m(u, v) != Order::Finite(2));
    let degree = |v: Gen| neighbours(v).count();

    match special {
        None => {
            let branches: Vec<Gen> = verts.iter().copied().filter(|&v| degree(v) >= 3).collect();
            match branches.as_slice() {
                [] => Some(FiniteType::A(n)),
                [b] if degree(*b) == 3 => {
                    let mut arms: Vec<usize> = neighbours(*b).map(|start| arm_length(sys, comp, *b, start)).collect();
                    arms.sort_unstable();
                    match arms.as_slice() {
                        [1, 1, _] => Some(FiniteType::D(n)),
                        [1, 2, 2] => Some(FiniteType::E(6)),
                        [1, 2, 3] => Some(FiniteType::E(7)),
                        [1, 2, 4] => Some(FiniteType::E(8)),
                        _ => None,
                    }
                }
                _ => None,
            }
        }
        Some((s, t, m)) => {
            if verts.iter().any(|&v| degree(v) > 2) {
                return None;
            }
            let at_end = degree(s) == 1 || degree(t) == 1;
            match (m, n) {
                (4, _) if at_end => Some(FiniteType::B(n)),
                (4, 4) => Some(FiniteType::F4),
                (5, 3) if at_end => Some(FiniteType::H(3)),
                (5, 4) if at_end => Some(FiniteType::H(4)),
                _ => None,
            }
        }
    }
}

/// Number of vertices on the arm that leaves `from` through `start`.
fn arm_length(sys: &CoxeterSystem, comp: GenSet, from: Gen, start: Gen) -> usize {
    let (mut prev, mut cur, mut len) = (from, start, 1);
    loop {
        let next = comp
            .iter()
            .find(|&u| u != cur && u != prev && sys.m(u, cur) != Order::Finite(2));
        match next {
            Some(u) => {
                prev = cur;
                cur = u;
                len += 1;
            }
            None => return len,
        }
    }
}
