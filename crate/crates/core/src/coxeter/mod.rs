//! Coxeter systems and their geometric representation.

mod classify;
mod element;
pub(crate) mod ops;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub use self::classify::FiniteType;
pub use self::element::{CoxeterElement, NuStep, Root, RootSign};
pub use self::ops::{Table, ROOT_EPS, SIGN_EPS};

use crate::error::{Error, Result};
use crate::gens::{Gen, GenSet};

/// Finite groups up to this order get a precomputed Cayley table.
pub const TABLE_CAP: u128 = 20_000;

/// An entry `m_{s,t}` of a Coxeter matrix.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(m) => write!(f, "{m}"),
            Order::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone)]
pub struct CoxeterSystem {
    names: Vec<String>,
    aliases: Vec<(String, Gen)>,
    orders: Vec<Order>,
    form: Vec<f64>,
    label: Option<String>,
    table: Option<Table>,
}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterSystem")
            .field("names", &self.names)
            .field("label", &self.label)
            .finish_non_exhaustive()
    }
}

impl CoxeterSystem {
    /// Builds a system from generator names and a list of `(s, t, m_{s,t})`
    /// entries. Pairs that are not listed default to `m = 2`; a pair listed in
    /// both orientations must agree.
    pub fn new<S: AsRef<str>>(names: &[S], entries: &[(S, S, Order)]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let n = names.len();
        if n > 64 {
            return Err(Error::RankTooLarge(n));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::DuplicateGenerator(a.clone()));
            }
        }
        let lookup = |s: &str| {
            names
                .iter()
                .position(|x| x == s)
                .ok_or_else(|| Error::UnknownGenerator(s.to_string()))
        };
        let mut given: Vec<Option<Order>> = vec![None; n * n];
        for (s, t, m) in entries {
            let (i, j) = (lookup(s.as_ref())?, lookup(t.as_ref())?);
            if let Some(prev) = given[i * n + j] {
                if prev != *m {
                    return Err(Error::AsymmetricMatrix { s: names[i].clone(), t: names[j].clone() });
                }
            }
            given[i * n + j] = Some(*m);
        }
        let mut matrix = vec![Order::Finite(2); n * n];
        for i in 0..n {
            for j in 0..n {
                let m = match (given[i * n + j], given[j * n + i]) {
                    (Some(a), Some(b)) if a != b => {
                        return Err(Error::AsymmetricMatrix { s: names[i].clone(), t: names[j].clone() })
                    }
                    (Some(a), _) | (None, Some(a)) => a,
                    (None, None) if i == j => Order::Finite(1),
                    (None, None) => Order::Finite(2),
                };
                matrix[i * n + j] = m;
            }
        }
        Self::from_matrix(names, matrix)
    }

    /// Builds a system from a full row-major `n × n` matrix.
    pub fn from_matrix(names: Vec<String>, matrix: Vec<Order>) -> Result<Self> {
        let n = names.len();
        if n > 64 {
            return Err(Error::RankTooLarge(n));
        }
        if matrix.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, found: matrix.len() });
        }
        for i in 0..n {
            if matrix[i * n + i] != Order::Finite(1) {
                return Err(Error::BadDiagonal { s: names[i].clone() });
            }
            for j in 0..n {
                if matrix[i * n + j] != matrix[j * n + i] {
                    return Err(Error::AsymmetricMatrix { s: names[i].clone(), t: names[j].clone() });
                }
                if i != j && matches!(matrix[i * n + j], Order::Finite(m) if m < 2) {
                    return Err(Error::BadOffDiagonal { s: names[i].clone(), t: names[j].clone() });
                }
            }
        }
        let form = matrix
            .iter()
            .map(|m| match *m {
                Order::Finite(1) => 1.0,
                Order::Finite(2) => 0.0,
                Order::Finite(m) => -libm::cos(core::f64::consts::PI / m as f64),
                Order::Infinite => -1.0,
            })
            .collect();
        let mut sys = CoxeterSystem { names, aliases: Vec::new(), orders: matrix, form, label: None, table: None };
        if let Some(order) = sys.order(sys.all()) {
            if order <= TABLE_CAP {
                sys.table = Some(Table::build(&sys));
            }
        }
        Ok(sys)
    }

    /// Expands a preset name: `A<n>`, `B<n>`, `D<n>`, `E6`–`E8`, `F4`, `G2`,
    /// `H3`, `H4`, `I2(<m>)` or `I2(inf)`. Generators are named `s1 … sn`;
    /// rank-two presets also accept `s`, `t` as aliases of `s1`, `s2`.
    pub fn preset(name: &str) -> Result<Self> {
        let unknown = || Error::UnknownPreset(name.to_string());
        let trimmed = name.trim();
        let (family, rest) = trimmed.split_at(trimmed.chars().next().map_or(0, |c| c.len_utf8()));
        let mut edges: Vec<(usize, usize, Order)> = Vec::new();
        let path = |n: usize, edges: &mut Vec<(usize, usize, Order)>| {
            for i in 1..n {
                edges.push((i - 1, i, Order::Finite(3)));
            }
        };
        let n = match family {
            "I" => {
                let inner = rest
                    .strip_prefix("2(")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(unknown)?;
                let m = if inner == "inf" || inner == "∞" {
                    Order::Infinite
                } else {
                    let m: u32 = inner.parse().map_err(|_| unknown())?;
                    if m < 2 {
                        return Err(unknown());
                    }
                    Order::Finite(m)
                };
                edges.push((0, 1, m));
                2
            }
            "A" | "B" | "D" | "E" | "F" | "G" | "H" => {
                let n: usize = rest.parse().map_err(|_| unknown())?;
                match (family, n) {
                    ("A", 1..=64) => path(n, &mut edges),
                    ("B", 2..=64) => {
                        path(n, &mut edges);
                        edges[0].2 = Order::Finite(4);
                    }
                    ("D", 4..=64) => {
                        path(n - 1, &mut edges);
                        edges.push((n - 3, n - 1, Order::Finite(3)));
                    }
                    ("E", 6..=8) => {
                        // s1 - s3 - s4 - s5 - … with s2 attached to s4
                        edges.push((0, 2, Order::Finite(3)));
                        edges.push((1, 3, Order::Finite(3)));
                        for i in 3..n {
                            edges.push((i - 1, i, Order::Finite(3)));
                        }
                    }
                    ("F", 4) => {
                        path(4, &mut edges);
                        edges[1].2 = Order::Finite(4);
                    }
                    ("G", 2) => edges.push((0, 1, Order::Finite(6))),
                    ("H", 2..=4) => {
                        path(n, &mut edges);
                        edges[0].2 = Order::Finite(5);
                    }
                    _ => return Err(unknown()),
                }
                n
            }
            _ => return Err(unknown()),
        };
        let names: Vec<String> = (1..=n).map(|i| format!("s{i}")).collect();
        let mut matrix = vec![Order::Finite(2); n * n];
        for i in 0..n {
            matrix[i * n + i] = Order::Finite(1);
        }
        for (i, j, m) in edges {
            matrix[i * n + j] = m;
            matrix[j * n + i] = m;
        }
        let mut sys = Self::from_matrix(names, matrix)?;
        if n == 2 {
            sys.aliases = vec![("s".to_string(), 0), ("t".to_string(), 1)];
        }
        sys.label = Some(trimmed.to_string());
        Ok(sys)
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    /// Preset name, when the system came from one.
    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, s: Gen) -> &str {
        &self.names[s]
    }

    pub fn gen(&self, name: &str) -> Result<Gen> {
        self.names
            .iter()
            .position(|x| x == name)
            .or_else(|| self.aliases.iter().find(|(a, _)| a == name).map(|&(_, s)| s))
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn all(&self) -> GenSet {
        GenSet::full(self.rank())
    }

    pub fn m(&self, s: Gen, t: Gen) -> Order {
        self.orders[s * self.rank() + t]
    }

    /// `(e_s, e_t)`.
    pub fn form(&self, s: Gen, t: Gen) -> f64 {
        self.form[s * self.rank() + t]
    }

    pub(crate) fn form_matrix(&self) -> &[f64] {
        &self.form
    }

    pub fn table(&self) -> Option<&Table> {
        self.table.as_ref()
    }

    /// Connected components of the Coxeter graph restricted to `x`.
    pub fn components(&self, x: GenSet) -> Vec<GenSet> {
        let mut left = x;
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let comp = self.grow(x, GenSet::singleton(start));
            left = left.difference(comp);
            out.push(comp);
        }
        out
    }

    fn grow(&self, within: GenSet, mut comp: GenSet) -> GenSet {
        loop {
            let mut next = comp;
            for s in comp {
                for t in within.difference(comp) {
                    if self.m(s, t) != Order::Finite(2) {
                        next.insert(t);
                    }
                }
            }
            if next == comp {
                return comp;
            }
            comp = next;
        }
    }

    /// `X(s)`: the component of `X ∪ {s}` containing `s`.
    pub fn component_of(&self, x: GenSet, s: Gen) -> GenSet {
        self.grow(x.with(s), GenSet::singleton(s))
    }

    /// Finite types of the components of `x`, or `None` when `W_X` is
    /// infinite.
    pub fn finite_type(&self, x: GenSet) -> Option<Vec<(GenSet, FiniteType)>> {
        self.components(x)
            .into_iter()
            .map(|c| classify::classify_component(self, c).map(|t| (c, t)))
            .collect()
    }

    pub fn is_spherical(&self, x: GenSet) -> bool {
        self.finite_type(x).is_some()
    }

    /// `|W_X|`, when finite.
    pub fn order(&self, x: GenSet) -> Option<u128> {
        self.finite_type(x)
            .map(|parts| parts.iter().fold(1u128, |acc, (_, t)| acc.saturating_mul(t.order())))
    }

    /// `|Φ⁺_X|`, when `W_X` is finite.
    pub fn positive_root_count(&self, x: GenSet) -> Option<usize> {
        self.finite_type(x).map(|parts| parts.iter().map(|(_, t)| t.positive_roots()).sum())
    }

    /// Parses whitespace-separated generator names. A lone `1` is the empty
    /// word.
    pub fn parse_word(&self, text: &str) -> Result<Vec<Gen>> {
        if text.trim() == "1" && self.gen("1").is_err() {
            return Ok(Vec::new());
        }
        text.split_whitespace().map(|tok| self.gen(tok)).collect()
    }

    pub fn format_word(&self, word: &[Gen]) -> String {
        if word.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        for (i, &s) in word.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(&self.names[s]);
        }
        out
    }

    /// Parses a subset written as `{s1,s3}`, `s1,s3`, `s1 s3` or `{}`.
    pub fn parse_set(&self, text: &str) -> Result<GenSet> {
        let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
        inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|tok| self.gen(tok))
            .collect()
    }

    pub fn format_set(&self, x: GenSet) -> String {
        let mut out = String::from("{");
        for (i, s) in x.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&self.names[s]);
        }
        out.push('}');
        out
    }
}
