use std::collections::BTreeMap;

use artin_core::oracle::{Caps, MonoidBall};
use artin_core::{Monoid, PositiveBraid};

use crate::common::ensure;
use crate::monoid::{cases, Case};

fn check_case(case: &Case) -> Result<String, String> {
    let caps = Caps { max_radius: case.small, ..Caps::default() };
    let ball = MonoidBall::enumerate_with(&case.sys, case.small, caps).map_err(|e| e.to_string())?;
    let m = Monoid::new(&case.sys);
    let mut seen: BTreeMap<PositiveBraid, u32> = BTreeMap::new();
    let mut factors = 0;
    for c in 0..ball.classes_up_to(case.small) {
        let rep = ball.rep(c);
        let g = m.braid(&rep).map_err(|e| e.to_string())?;
        // uniqueness: one normal form per element, shared by every word
        if let Some(other) = seen.insert(g.clone(), c) {
            return Err(format!("{}: classes {other} and {c} share a normal form", case.name));
        }
        for w in ball.members(c) {
            ensure(m.braid(&w).map_err(|e| e.to_string())? == g, || format!("{}: {w:?} has another form", case.name))?;
        }
        // recomposition
        ensure(ball.class_of(&g.word()) == Some(c), || format!("{}: {rep:?} does not recompose", case.name))?;
        // greedy condition g_i = α(g_i ⋯ g_n)
        let fs = g.factors();
        for i in 0..fs.len() {
            let tail: Vec<usize> = fs[i..].iter().flat_map(|f| f.word().iter().copied()).collect();
            let tail = ball.class_of(&tail).ok_or("tail outside the ball")?;
            let alpha = ball.alpha(tail);
            ensure(alpha.is_some() && alpha == ball.class_of(fs[i].word()), || {
                format!("{}: factor {i} of {rep:?} is not the greatest reduced divisor", case.name)
            })?;
            factors += 1;
        }
    }
    Ok(format!("{} [{} elements, {factors} factors]", case.name, seen.len()))
}

/// Criterion 2.
pub fn normal_form() -> Result<String, String> {
    let parts: Result<Vec<String>, String> = cases().iter().map(check_case).collect();
    Ok(parts?.join(", "))
}
