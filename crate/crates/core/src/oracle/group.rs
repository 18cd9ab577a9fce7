use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::coxeter::CoxeterSystem;
use crate::error::{Error, Result};
use crate::gens::{Gen, GenSet};

/// A finite Coxeter group enumerated breadth-first as a set of matrices of
/// the reflection representation. Elements are told apart by their matrix
/// (rounded to 1e-6), never by words. Element `0` is the identity and BFS
/// depth is the Coxeter length.
#[derive(Clone, Debug)]
pub struct GroupTable {
    n: usize,
    matrices: Vec<Vec<f64>>,
    lens: Vec<u32>,
    words: Vec<Vec<Gen>>,
    rmul: Vec<u32>,
    lmul: Vec<u32>,
    index: BTreeMap<Vec<i64>, u32>,
}

fn key(m: &[f64]) -> Vec<i64> {
    m.iter().map(|x| libm::round(x * 1e6) as i64).collect()
}

impl GroupTable {
    pub fn build(sys: &CoxeterSystem, cap: usize) -> Result<Self> {
        let order = sys.order(sys.all());
        match order {
            Some(o) if o <= cap as u128 => {}
            _ => return Err(Error::NotEnumerable { order, cap }),
        }
        let n = sys.rank();
        let b = |s: Gen, t: Gen| sys.form(s, t);
        let mut id = vec![0.0; n * n];
        for i in 0..n {
            id[i * n + i] = 1.0;
        }
        let mut table = GroupTable {
            n,
            matrices: vec![id.clone()],
            lens: vec![0],
            words: vec![Vec::new()],
            rmul: Vec::new(),
            lmul: Vec::new(),
            index: BTreeMap::new(),
        };
        table.index.insert(key(&id), 0);
        let mut i = 0;
        while i < table.matrices.len() {
            for s in 0..n {
                // column t of w·s is w·(e_t − 2(e_t,e_s)e_s)
                let w = &table.matrices[i];
                let mut m = w.clone();
                for t in 0..n {
                    let c = 2.0 * b(t, s);
                    for r in 0..n {
                        m[t * n + r] -= c * w[s * n + r];
                    }
                }
                let k = key(&m);
                let j = match table.index.get(&k) {
                    Some(&j) => j,
                    None => {
                        let j = table.matrices.len() as u32;
                        let mut word = table.words[i].clone();
                        word.push(s);
                        table.index.insert(k, j);
                        table.matrices.push(m);
                        table.lens.push(table.lens[i] + 1);
                        table.words.push(word);
                        j
                    }
                };
                table.rmul.push(j);
            }
            i += 1;
        }
        let size = table.matrices.len();
        table.lmul = vec![0; size * n];
        for w in 0..size {
            for s in 0..n {
                // s·w: reflect every column
                let mut m = table.matrices[w].clone();
                for t in 0..n {
                    let col = &mut m[t * n..(t + 1) * n];
                    let dot: f64 = (0..n).map(|u| col[u] * b(u, s)).sum();
                    col[s] -= 2.0 * dot;
                }
                table.lmul[w * n + s] = *table.index.get(&key(&m)).ok_or(Error::Internal("group not closed"))?;
            }
        }
        Ok(table)
    }

    pub fn order(&self) -> usize {
        self.matrices.len()
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn length(&self, w: u32) -> usize {
        self.lens[w as usize] as usize
    }

    /// Some reduced word (the BFS path), not necessarily canonical.
    pub fn word(&self, w: u32) -> &[Gen] {
        &self.words[w as usize]
    }

    pub fn rmul(&self, w: u32, s: Gen) -> u32 {
        self.rmul[w as usize * self.n + s]
    }

    pub fn lmul(&self, s: Gen, w: u32) -> u32 {
        self.lmul[w as usize * self.n + s]
    }

    pub fn element_of(&self, word: &[Gen]) -> u32 {
        word.iter().fold(0, |w, &s| self.rmul(w, s))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.words[b as usize].iter().fold(a, |w, &s| self.rmul(w, s))
    }

    pub fn inverse(&self, w: u32) -> u32 {
        self.words[w as usize].iter().rev().fold(0, |acc, &s| self.rmul(acc, s))
    }

    /// `w·v`.
    pub fn act(&self, w: u32, v: &[f64]) -> Vec<f64> {
        let n = self.n;
        let m = &self.matrices[w as usize];
        let mut out = vec![0.0; n];
        for (t, &x) in v.iter().enumerate() {
            for r in 0..n {
                out[r] += x * m[t * n + r];
            }
        }
        out
    }

    /// Index of the simple root `e_y` equal to `v`, if any.
    fn simple_root_index(v: &[f64]) -> Option<Gen> {
        let y = v.iter().position(|&x| libm::fabs(x - 1.0) < 1e-6)?;
        v.iter().enumerate().all(|(i, &x)| i == y || libm::fabs(x) < 1e-6).then_some(y)
    }

    /// The permutation `x ↦ y` with `w·e_x = e_y` when `w·Π_X = Π_X`.
    pub fn stabilizes(&self, w: u32, x: GenSet) -> Option<Vec<(Gen, Gen)>> {
        let mut perm = Vec::new();
        for s in x {
            let mut e = vec![0.0; self.n];
            e[s] = 1.0;
            let y = Self::simple_root_index(&self.act(w, &e))?;
            if !x.contains(y) {
                return None;
            }
            perm.push((s, y));
        }
        Some(perm)
    }

    /// `{w : w·Π_X = Π_X}`.
    pub fn g_x(&self, x: GenSet) -> Vec<u32> {
        (0..self.order() as u32).filter(|&w| self.stabilizes(w, x).is_some()).collect()
    }

    /// `{w : w·W_X·w⁻¹ = W_X}`, by conjugating each generator and testing
    /// membership in `W_X` (elements with a reduced word inside `X`).
    pub fn normalizer(&self, x: GenSet) -> Vec<u32> {
        let in_wx: Vec<bool> = self.subgroup_mask(x);
        (0..self.order() as u32)
            .filter(|&w| {
                let wi = self.inverse(w);
                x.iter().all(|s| in_wx[self.mul(self.rmul(w, s), wi) as usize])
            })
            .collect()
    }

    /// Membership mask of the parabolic subgroup `W_X`, by closure.
    pub fn subgroup_mask(&self, x: GenSet) -> Vec<bool> {
        let mut mask = vec![false; self.order()];
        mask[0] = true;
        let mut stack = vec![0u32];
        while let Some(w) = stack.pop() {
            for s in x {
                let v = self.rmul(w, s);
                if !mask[v as usize] {
                    mask[v as usize] = true;
                    stack.push(v);
                }
            }
        }
        mask
    }
}
