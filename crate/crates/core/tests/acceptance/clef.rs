use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use artin_core::ribbons::{
    elementary_ribbon, in_quasi_centralizer, normalizer_membership, parabolic_contained, prop_clef, RibbonPath,
};
use artin_core::{ArtinElement, CoxeterSystem, Error, Garside, GenSet, Monoid, PositiveBraid, SignedWord};

use crate::common::ensure;

const INSTANCES: usize = 500;

fn random_subset(rng: &mut ChaCha8Rng, rank: usize) -> GenSet {
    GenSet::from_bits(rng.gen_range(1..(1u64 << rank)))
}

fn random_positive(rng: &mut ChaCha8Rng, m: &Monoid<'_>, y: GenSet, max_len: usize) -> PositiveBraid {
    let letters: Vec<usize> = y.iter().collect();
    if letters.is_empty() {
        return PositiveBraid::identity();
    }
    let len = rng.gen_range(0..=max_len);
    let word: Vec<usize> = (0..len).map(|_| letters[rng.gen_range(0..letters.len())]).collect();
    m.braid(&word).unwrap()
}

fn random_signed(rng: &mut ChaCha8Rng, y: GenSet, min_len: usize, max_len: usize) -> SignedWord {
    let letters: Vec<usize> = y.iter().collect();
    let len = if letters.is_empty() { 0 } else { rng.gen_range(min_len..=max_len) };
    SignedWord((0..len).map(|_| (letters[rng.gen_range(0..letters.len())], rng.gen_bool(0.5))).collect())
}

fn random_path(rng: &mut ChaCha8Rng, m: &Monoid<'_>, x: GenSet) -> RibbonPath {
    let mut path = RibbonPath::empty(x);
    for _ in 0..rng.gen_range(0..=3) {
        let t = rng.gen_range(0..m.system().rank());
        let step = elementary_ribbon(m, path.target(), t).unwrap();
        path.push(m, step).unwrap();
    }
    path
}

/// `x·X = R·x`, tested on normal forms of the conjugates.
fn conjugates_onto(gs: &Garside<'_>, x: &ArtinElement, src: GenSet, r: GenSet) -> bool {
    let m = gs.monoid();
    let image: Option<GenSet> = src
        .iter()
        .map(|s| {
            let c = gs.conjugate(x, &gs.from_positive(&m.letter(s)));
            r.iter().find(|&t| c == gs.from_positive(&m.letter(t)))
        })
        .collect();
    image == Some(r)
}

fn condition_two(gs: &Garside<'_>, g: &ArtinElement, x: GenSet, y: GenSet) -> bool {
    let m = gs.monoid();
    let dx2 = gs.from_positive(&m.pow(gs.data_for(x).unwrap().delta(), 2));
    gs.in_parabolic(&gs.conjugate(g, &dx2), y)
}

fn positive_instance(gs: &Garside<'_>, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let m = gs.monoid();
    let sys = gs.system();
    let rank = sys.rank();
    let x = random_subset(rng, rank);
    let path = random_path(rng, m, x);
    let y = path.target().union(GenSet::from_bits(rng.gen_range(0..(1u64 << rank))));
    let n2 = 2 * rng.gen_range(0..=1);
    let y0 = gs.from_positive(&random_positive(rng, m, y, 4));
    let xx = gs.mul(&gs.from_positive(path.product()), &gs.delta_power(n2));
    let g = gs.mul(&y0, &xx);
    let label = || format!("g = {}, X = {}, Y = {}", gs.format(&g), sys.format_set(x), sys.format_set(y));

    let w = prop_clef(gs, &g, x, y).map_err(|e| format!("prop_clef failed on {}: {e}", label()))?;
    ensure(gs.mul(&w.y, &w.x) == g, || format!("witness does not recompose for {}", label()))?;
    ensure(gs.in_parabolic(&w.y, y) && w.target.is_subset(y), || format!("witness leaves A_Y for {}", label()))?;
    let certified = gs.mul(&gs.from_positive(w.path.product()), &gs.delta_power(w.delta_exponent));
    ensure(certified == w.x && conjugates_onto(gs, &w.x, x, w.target), || format!("bad conjugator for {}", label()))?;
    let contained = x.iter().all(|s| gs.in_parabolic(&gs.conjugate(&g, &gs.from_positive(&m.letter(s))), y));
    ensure(contained, || format!("g·A_X·g⁻¹ ⊄ A_Y for {}", label()))?;
    ensure(matches!(parabolic_contained(gs, &g, x, y), Ok(Some(_))), || format!("containment refused for {}", label()))?;

    // a normalizing element: y₁·rev(r)·r·Δ^{2n}·a with y₁, a ∈ A_X
    let r = path.product();
    let q = gs.from_positive(&m.mul(&m.reverse(r), r));
    let y1 = gs.from_positive(&random_positive(rng, m, x, 4));
    let a = gs.group_from_word(&random_signed(rng, x, 0, 4)).unwrap();
    let h = gs.mul(&gs.mul(&gs.mul(&y1, &q), &gs.delta_power(n2)), &a);
    let w = normalizer_membership(gs, &h, x)
        .map_err(|e| e.to_string())?
        .ok_or_else(|| format!("normalizer refused {} for X = {}", gs.format(&h), sys.format_set(x)))?;
    ensure(gs.mul(&w.y, &w.x) == h && gs.in_parabolic(&w.y, x), || format!("bad A_X part for {}", gs.format(&h)))?;
    ensure(in_quasi_centralizer(gs, &w.x, x) && w.target == x, || format!("bad QZ part for {}", gs.format(&h)))?;
    Ok(())
}

fn negative_instance(gs: &Garside<'_>, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let rank = gs.system().rank();
    let (g, x, y) = loop {
        let g = gs.group_from_word(&random_signed(rng, GenSet::full(rank), 1, 8)).unwrap();
        let x = random_subset(rng, rank);
        let y = GenSet::from_bits(rng.gen_range(0..(1u64 << rank)));
        if !condition_two(gs, &g, x, y) && !condition_two(gs, &g, x, x) {
            break (g, x, y);
        }
    };
    let label = || format!("g = {}, X = {:?}, Y = {:?}", gs.format(&g), x, y);
    ensure(prop_clef(gs, &g, x, y) == Err(Error::NotContained), || format!("prop_clef accepted {}", label()))?;
    ensure(parabolic_contained(gs, &g, x, y) == Ok(None), || format!("containment accepted {}", label()))?;
    ensure(normalizer_membership(gs, &g, x) == Ok(None), || format!("normalizer accepted {}", label()))?;
    Ok(())
}

/// Criterion 5.
pub fn round_trips() -> Result<String, String> {
    let sys = CoxeterSystem::preset("A3").unwrap();
    let gs = Garside::new(&sys).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..INSTANCES {
        positive_instance(&gs, &mut rng)?;
    }
    for _ in 0..INSTANCES {
        negative_instance(&gs, &mut rng)?;
    }
    Ok(format!("A3: {INSTANCES} constructed instances, {INSTANCES} failing instances"))
}
