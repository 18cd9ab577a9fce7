use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use artin_core::oracle::GroupTable;
use artin_core::coxeter;
use artin_core::{CoxeterSystem, RootSign};

use crate::common::ensure;

const PAIRS: usize = 10_000;
/// Distance at which a vector is identified with a root.
const ROOT_TOL: f64 = 1e-6;
/// Slack allowed on the sign of a root coordinate.
const SIGN_TOL: f64 = 1e-9;

fn check_system(name: &str, rng: &mut ChaCha8Rng) -> Result<String, String> {
    ensure(coxeter::ROOT_EPS == ROOT_TOL && coxeter::SIGN_EPS == SIGN_TOL, || "library tolerances changed".into())?;
    let sys = CoxeterSystem::preset(name).unwrap();
    let roots = sys.roots(10_000).map_err(|e| e.to_string())?;
    let expected = 2 * sys.positive_root_count(sys.all()).unwrap();
    ensure(roots.len() == expected, || format!("{name}: {} roots, expected {expected}", roots.len()))?;
    ensure(roots.iter().all(|r| r.sign() != RootSign::Mixed), || format!("{name}: an enumerated root has mixed signs"))?;
    let table = GroupTable::build(&sys, 10_000).map_err(|e| e.to_string())?;
    let rank = sys.rank();
    let mut worst: f64 = 0.0;
    for _ in 0..PAIRS {
        let len = rng.gen_range(0..=3 * table.length(table.order() as u32 - 1));
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..rank)).collect();
        let w = sys.element(&word).unwrap();
        let alpha = &roots[rng.gen_range(0..roots.len())];
        let image = sys.act(&w, alpha).map_err(|e| e.to_string())?;
        let hits: Vec<_> = roots.iter().filter(|r| r.approx_eq(&image)).collect();
        ensure(hits.len() == 1, || format!("{name}: w·α matches {} enumerated roots", hits.len()))?;
        let coords = image.coords();
        let positive = coords.iter().all(|&c| c >= -SIGN_TOL);
        let negative = coords.iter().all(|&c| c <= SIGN_TOL);
        ensure(positive != negative && image.sign() == hits[0].sign(), || format!("{name}: sign dichotomy fails"))?;
        // the oracle's matrix for the same word
        let oracle = table.act(table.element_of(&word), alpha.coords());
        let diff = oracle.iter().zip(coords).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        worst = worst.max(diff);
        ensure(diff <= ROOT_TOL, || format!("{name}: reflection action differs from the matrix oracle by {diff:e}"))?;
    }
    Ok(format!("{name}: {} roots, {PAIRS} pairs, max deviation {worst:.1e}", roots.len()))
}

/// Criterion 8.
pub fn root_numerics() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    Ok([check_system("H3", &mut rng)?, check_system("I2(7)", &mut rng)?].join(", "))
}
