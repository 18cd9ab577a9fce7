//! Right word reversing: rewrites `a⁻¹b` into `u·v⁻¹` using
//! `s⁻¹t → (tst⋯)(sts⋯)⁻¹`, both sides of length `m_{s,t} − 1`.
//! On termination `a·u = b·v` is the least common right multiple.

use alloc::vec::Vec;

use super::NoCommonMultiple;
use crate::coxeter::{CoxeterSystem, Order};
use crate::gens::Gen;

/// Alternating word `s t s ⋯` of length `k`.
pub(crate) fn alternating(s: Gen, t: Gen, k: usize) -> impl Iterator<Item = Gen> {
    (0..k).map(move |i| if i % 2 == 0 { s } else { t })
}

/// Returns `(u, v)` with `a·u = b·v = lcm`. `bound` caps the length of the
/// common multiple; the working word and step count are capped accordingly.
pub(crate) fn complement(
    sys: &CoxeterSystem,
    a: &[Gen],
    b: &[Gen],
    bound: usize,
) -> Result<(Vec<Gen>, Vec<Gen>), NoCommonMultiple> {
    // (letter, inverted)
    let mut w: Vec<(Gen, bool)> = a.iter().rev().map(|&s| (s, true)).chain(b.iter().map(|&s| (s, false))).collect();
    let max_len = 2 * bound + a.len() + b.len();
    let max_steps = 4 * (bound + 1) * (bound + 1);
    let mut steps = 0usize;
    let mut i = 0usize;
    let mut scratch: Vec<(Gen, bool)> = Vec::new();
    while i + 1 < w.len() {
        let ((s, s_inv), (t, t_inv)) = (w[i], w[i + 1]);
        if !(s_inv && !t_inv) {
            i += 1;
            continue;
        }
        steps += 1;
        if steps > max_steps || w.len() > max_len {
            return Err(NoCommonMultiple::BoundExceeded { bound });
        }
        if s == t {
            w.drain(i..i + 2);
        } else {
            let m = match sys.m(s, t) {
                Order::Infinite => return Err(NoCommonMultiple::FreePair { s, t }),
                Order::Finite(m) => m as usize,
            };
            scratch.clear();
            scratch.extend(alternating(t, s, m - 1).map(|x| (x, false)));
            let tail: Vec<Gen> = alternating(s, t, m - 1).collect();
            scratch.extend(tail.iter().rev().map(|&x| (x, true)));
            w.splice(i..i + 2, scratch.iter().copied());
        }
        i = i.saturating_sub(1);
    }
    let split = w.iter().position(|&(_, inv)| inv).unwrap_or(w.len());
    let u: Vec<Gen> = w[..split].iter().map(|&(x, _)| x).collect();
    let v: Vec<Gen> = w[split..].iter().rev().map(|&(x, _)| x).collect();
    if a.len() + u.len() > bound {
        return Err(NoCommonMultiple::BoundExceeded { bound });
    }
    Ok((u, v))
}
