use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use artin_core::oracle::Reverser;
use artin_core::{CoxeterSystem, Garside, SignedWord};

use crate::common::ensure;

const SAMPLES: usize = 1000;
const MAX_LEN: usize = 10;

fn random_word(rng: &mut ChaCha8Rng, rank: usize) -> SignedWord {
    let len = rng.gen_range(0..=MAX_LEN);
    SignedWord((0..len).map(|_| (rng.gen_range(0..rank), rng.gen_bool(0.5))).collect())
}

/// A different word for the same element: a cancelling pair inserted at a
/// random place.
fn disguise(rng: &mut ChaCha8Rng, w: &SignedWord, rank: usize) -> SignedWord {
    let mut out = w.0.clone();
    let at = rng.gen_range(0..=out.len());
    let s = rng.gen_range(0..rank);
    let sign = rng.gen_bool(0.5);
    out.splice(at..at, [(s, sign), (s, !sign)]);
    SignedWord(out)
}

fn check_system(name: &str, epsilon: u8, rng: &mut ChaCha8Rng) -> Result<usize, String> {
    let sys = CoxeterSystem::preset(name).map_err(|e| e.to_string())?;
    let gs = Garside::new(&sys).map_err(|e| e.to_string())?;
    let m = gs.monoid();
    let data = gs.data();
    let w0 = sys.longest_element(sys.all()).map_err(|e| e.to_string())?;
    ensure(m.image(data.delta()) == w0, || format!("{name}: p(Δ) is not the longest element"))?;

    let delta = gs.delta_power(1);
    let mut trivial = true;
    for s in sys.all() {
        let sigma = data.sigma(s);
        ensure(data.sigma(sigma) == s, || format!("{name}: σ² ≠ id at {}", sys.name(s)))?;
        let letter = gs.from_positive(&m.letter(s));
        let image = gs.conjugate(&delta, &letter);
        ensure(image == gs.from_positive(&m.letter(sigma)), || format!("{name}: Δ·s·Δ⁻¹ ≠ σ(s)"))?;
        trivial &= image == letter;
    }
    let measured = if trivial { 1 } else { 2 };
    ensure(measured == epsilon && data.epsilon() == epsilon, || {
        format!("{name}: ε = {} (conjugation gives {measured}, expected {epsilon})", data.epsilon())
    })?;

    let reverser = Reverser::new(&sys, 1_000_000);
    let rank = sys.rank();
    for _ in 0..SAMPLES {
        let w = random_word(rng, rank);
        let g = gs.group_from_word(&w).map_err(|e| e.to_string())?;
        let (a, b) = (g.numerator(), g.denominator());
        ensure(m.gcd_right(a, b).is_identity(), || format!("{name}: {} has a common right divisor", w.format(&sys)))?;
        let again = gs.group_from_word(&disguise(rng, &w, rank)).map_err(|e| e.to_string())?;
        ensure(again == g, || format!("{name}: two words for one element give different forms"))?;
        // a·b⁻¹·w⁻¹ = 1, decided by word reversing alone
        let mut z = SignedWord::positive(&a.word()).0;
        z.extend(SignedWord::positive(&b.word()).inverse().0);
        z.extend(w.inverse().0);
        let trivial = reverser.is_trivial(z).map_err(|e| e.to_string())?;
        ensure(trivial == Some(true), || format!("{name}: normal form of {} has the wrong value", w.format(&sys)))?;
    }
    Ok(SAMPLES)
}

/// Criterion 3.
pub fn garside_facts() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut parts = Vec::new();
    for (name, eps) in [("A2", 2), ("B2", 1), ("A3", 2)] {
        let n = check_system(name, eps, &mut rng)?;
        parts.push(format!("{name} ε={eps} {n} words"));
    }
    Ok(parts.join(", "))
}
