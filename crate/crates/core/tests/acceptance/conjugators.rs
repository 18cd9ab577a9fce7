use std::collections::BTreeSet;

use artin_core::oracle::{Caps, ClassId, MonoidBall};
use artin_core::ribbons::{elementary_ribbon, ribbon_decompose};
use artin_core::{CoxeterSystem, GenSet, Monoid};

const MAX_LEN: usize = 6;

fn check_system(name: &str) -> Result<String, String> {
    let sys = CoxeterSystem::preset(name).map_err(|e| e.to_string())?;
    let m = Monoid::new(&sys);
    let radius = MAX_LEN + 1;
    let caps = Caps { max_radius: radius, ..Caps::default() };
    let ball = MonoidBall::enumerate_with(&sys, radius, caps).map_err(|e| e.to_string())?;
    let subsets: Vec<GenSet> = sys.all().subsets().collect();
    let mut oracle_sets = Vec::new();
    for &x in &subsets {
        for &y in &subsets {
            let found = ball.conjugators(x, y, MAX_LEN).map_err(|e| e.to_string())?;
            oracle_sets.push(found.into_iter().collect::<BTreeSet<ClassId>>());
        }
    }
    let (mut members, mut pairs) = (0, 0);
    for c in 0..ball.classes_up_to(MAX_LEN) {
        let word = ball.rep(c);
        let g = m.braid(&word).map_err(|e| e.to_string())?;
        for (i, &x) in subsets.iter().enumerate() {
            let path = ribbon_decompose(&m, &g, x).ok();
            for (j, &y) in subsets.iter().enumerate() {
                pairs += 1;
                let oracle = oracle_sets[i * subsets.len() + j].contains(&c);
                let engine = path.as_ref().is_some_and(|p| {
                    let chained = p.steps().windows(2).all(|w| w[0].target == w[1].source);
                    let starts = p.steps().first().is_none_or(|s| s.source == x);
                    let elementary = p.steps().iter().all(|s| elementary_ribbon(&m, s.source, s.letter).as_ref() == Ok(s));
                    p.target() == y && p.product() == &g && chained && starts && elementary
                });
                if oracle != engine {
                    return Err(format!("{name}: g = {word:?}, X = {x:?}, Y = {y:?}: oracle {oracle}, ribbons {engine}"));
                }
                members += oracle as usize;
            }
        }
    }
    Ok(format!("{name} {pairs} (g,X,Y) triples, {members} conjugators"))
}

/// Criterion 4.
pub fn ribbon_characterization() -> Result<String, String> {
    Ok([check_system("A2")?, check_system("B2")?].join(", "))
}
