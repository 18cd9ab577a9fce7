use std::collections::BTreeSet;

use artin_core::oracle::{Caps, DivisorIndex, LcmAnswer, LcmIndex, MonoidBall, Reverser};
use artin_core::{CoxeterSystem, Monoid, NoCommonMultiple, PositiveBraid};

use crate::common::triangle;

/// Step cap for the word-reversing lcm certificates.
const REVERSING_STEPS: usize = 1_000_000;

pub struct Case {
    pub name: &'static str,
    pub sys: CoxeterSystem,
    /// Radius of the ball whose pairs are checked.
    pub small: usize,
    /// Radius of the oracle ball used to search for common multiples.
    pub big: usize,
}

pub fn cases() -> Vec<Case> {
    let preset = |n| CoxeterSystem::preset(n).unwrap();
    vec![
        Case { name: "A2", sys: preset("A2"), small: 8, big: 16 },
        Case { name: "B2", sys: preset("B2"), small: 8, big: 16 },
        Case { name: "I2(5)", sys: preset("I2(5)"), small: 8, big: 16 },
        Case { name: "A3", sys: preset("A3"), small: 6, big: 12 },
        Case { name: "triangle", sys: triangle(), small: 6, big: 12 },
    ]
}

pub fn big_ball(case: &Case) -> MonoidBall {
    let caps = Caps { max_radius: case.big, max_words: 4_000_000, ..Caps::default() };
    MonoidBall::enumerate_with(&case.sys, case.big, caps).expect("oracle ball")
}

struct Report {
    errors: Vec<String>,
    checked: usize,
}

impl Report {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.errors.len() < 8 {
            self.errors.push(msg());
        }
    }
}

fn lcm_agrees(
    case: &Case,
    ball: &MonoidBall,
    reverser: &Reverser,
    oracle: LcmAnswer,
    engine: Result<PositiveBraid, NoCommonMultiple>,
    (a, b): (&[usize], &[usize]),
    left: bool,
    certified: &mut usize,
) -> bool {
    let spherical = case.sys.is_spherical(case.sys.all());
    match (oracle, engine) {
        (LcmAnswer::Found(c), Ok(g)) => ball.class_of(&g.word()) == Some(c),
        (LcmAnswer::NoneWithin(r), Ok(g)) => {
            // too long for the ball: certify by word reversing
            *certified += 1;
            let verify = if left { Reverser::is_lcm_left } else { Reverser::is_lcm_right };
            g.len() > r && verify(reverser, a, b, &g.word()) == Ok(true)
        }
        (LcmAnswer::NoneWithin(r), Err(NoCommonMultiple::BoundExceeded { bound })) => !spherical && bound >= r,
        (LcmAnswer::NoneWithin(_), Err(NoCommonMultiple::FreePair { .. })) => !spherical,
        _ => false,
    }
}

fn check_case(case: &Case) -> Result<String, String> {
    let ball = big_ball(case);
    let div = DivisorIndex::build(&ball, case.small);
    let lcm = LcmIndex::build(&ball, case.small);
    let m = Monoid::new(&case.sys).with_lcm_bound(case.big);
    let n = ball.classes_up_to(case.small);
    let reps: Vec<Vec<usize>> = (0..n).map(|c| ball.rep(c)).collect();
    let nf: Vec<PositiveBraid> = reps.iter().map(|w| m.braid(w).unwrap()).collect();
    let reverser = Reverser::new(&case.sys, REVERSING_STEPS);
    let class_of = |g: &PositiveBraid| ball.class_of(&g.word());
    let mut rep = Report { errors: Vec::new(), checked: 0 };

    let distinct: BTreeSet<&PositiveBraid> = nf.iter().collect();
    rep.check(distinct.len() == n as usize, || format!("{}: {} classes but {} normal forms", case.name, n, distinct.len()));
    for c in 0..n {
        for w in ball.members(c) {
            let g = m.braid(&w).unwrap();
            rep.check(g == nf[c as usize], || format!("{}: word {w:?} has a different normal form", case.name));
        }
    }

    let mut certified = 0;
    for a in 0..n {
        for b in 0..n {
            let (ga, gb) = (&nf[a as usize], &nf[b as usize]);
            let pair = || format!("{}: ({:?}, {:?})", case.name, reps[a as usize], reps[b as usize]);
            rep.check(m.left_divides(ga, gb) == div.divides_left(a, b), || format!("{} left divisibility", pair()));
            rep.check(m.right_divides(ga, gb) == div.divides_right(a, b), || format!("{} right divisibility", pair()));
            rep.check(class_of(&m.gcd_left(ga, gb)) == div.gcd_left(a, b), || format!("{} gcd_left", pair()));
            rep.check(class_of(&m.gcd_right(ga, gb)) == div.gcd_right(a, b), || format!("{} gcd_right", pair()));
            let words = (reps[a as usize].as_slice(), reps[b as usize].as_slice());
            let ok = lcm_agrees(case, &ball, &reverser, lcm.lcm_left(a, b), m.lcm_left(ga, gb), words, true, &mut certified);
            rep.check(ok, || format!("{} lcm_left", pair()));
            let ok = lcm_agrees(case, &ball, &reverser, lcm.lcm_right(a, b), m.lcm_right(ga, gb), words, false, &mut certified);
            rep.check(ok, || format!("{} lcm_right", pair()));
        }
    }
    if rep.errors.is_empty() {
        Ok(format!("{} [{} elements, {} checks, {} certified lcms]", case.name, n, rep.checked, certified))
    } else {
        Err(rep.errors.join("; "))
    }
}

/// Criterion 1.
pub fn oracle_equivalence() -> Result<String, String> {
    let mut parts = Vec::new();
    for case in cases() {
        let t = std::time::Instant::now();
        let part = check_case(&case)?;
        parts.push(format!("{part} {:.1}s", t.elapsed().as_secs_f64()));
    }
    Ok(parts.join(", "))
}

