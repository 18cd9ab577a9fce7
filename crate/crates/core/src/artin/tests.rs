use super::*;

fn a2() -> CoxeterSystem {
    CoxeterSystem::preset("A2").unwrap()
}

fn factors(m: &Monoid<'_>, g: &PositiveBraid) -> Vec<Vec<Gen>> {
    let _ = m;
    g.factors().iter().map(|f| f.word().to_vec()).collect()
}

const S: Gen = 0;
const T: Gen = 1;

#[test]
fn canonicalize_examples() {
    let sys = a2();
    let m = Monoid::new(&sys);
    assert_eq!(factors(&m, &m.braid(&[S, S]).unwrap()), vec![vec![S], vec![S]]);
    assert_eq!(factors(&m, &m.braid(&[S, S, T]).unwrap()), vec![vec![S], vec![S, T]]);
    assert_eq!(factors(&m, &m.braid(&[S, T, S, T]).unwrap()), vec![vec![S, T, S], vec![T]]);
    assert_eq!(m.format(&m.braid(&[S, S, T]).unwrap()), "s1 . s1 s2");
    assert!(matches!(m.braid(&[S, 7]), Err(Error::UnknownGenerator(_))));
}

#[test]
fn alpha_examples() {
    let sys = a2();
    let m = Monoid::new(&sys);
    assert_eq!(m.alpha(&m.braid(&[S, T]).unwrap()).word(), [S, T]);
    assert_eq!(m.alpha(&m.braid(&[S, S, T]).unwrap()).word(), [S]);
    assert_eq!(m.alpha(&m.braid(&[S, T, S, T]).unwrap()).word(), [S, T, S]);
    assert!(m.alpha(&PositiveBraid::identity()).is_identity());
}

#[test]
fn is_reduced_examples() {
    let sys = a2();
    let m = Monoid::new(&sys);
    assert!(m.is_reduced(&[S, T, S]));
    assert!(!m.is_reduced(&[S, S]));
    let free = CoxeterSystem::preset("I2(inf)").unwrap();
    assert!(Monoid::new(&free).is_reduced(&[S, T, S, T]));
}

#[test]
fn divisibility_examples() {
    let sys = a2();
    let m = Monoid::new(&sys);
    let s = m.letter(S);
    let t = m.letter(T);
    let sts = m.braid(&[S, T, S]).unwrap();
    let st = m.braid(&[S, T]).unwrap();
    assert!(m.left_divides(&s, &sts));
    assert!(m.right_divides(&s, &sts));
    assert_eq!(m.right_quotient(&s, &sts), Some(st.clone()));
    assert!(!m.left_divides(&t, &st));
    assert_eq!(m.left_quotient(&sts, &sts), Some(PositiveBraid::identity()));
}

#[test]
fn gcd_lcm_examples() {
    let sys = a2();
    let m = Monoid::new(&sys);
    let sts = m.braid(&[S, T, S]).unwrap();
    let ts = m.braid(&[T, S]).unwrap();
    assert_eq!(m.gcd_left(&sts, &ts), ts);
    assert!(m.gcd_left(&m.letter(S), &m.letter(T)).is_identity());
    assert!(m.gcd_left(&sts, &PositiveBraid::identity()).is_identity());

    assert_eq!(m.lcm_left(&m.letter(S), &m.letter(T)), Ok(sts.clone()));
    assert_eq!(m.lcm_right(&m.letter(S), &m.letter(T)), Ok(sts.clone()));
    assert_eq!(m.lcm_left(&ts, &PositiveBraid::identity()), Ok(ts));

    let free = CoxeterSystem::preset("I2(inf)").unwrap();
    let mf = Monoid::new(&free);
    assert_eq!(
        mf.lcm_left(&mf.letter(S), &mf.letter(T)),
        Err(NoCommonMultiple::FreePair { s: S, t: T })
    );
}

#[test]
fn lcm_of_generators_is_delta() {
    for name in ["A3", "B3", "H3", "D4"] {
        let sys = CoxeterSystem::preset(name).unwrap();
        let m = Monoid::new(&sys);
        let mut l = PositiveBraid::identity();
        for s in 0..sys.rank() {
            l = m.lcm_left(&l, &m.letter(s)).unwrap();
        }
        let w0 = sys.longest_element(sys.all()).unwrap();
        assert_eq!(l, m.lift(&w0), "{name}");
    }
}

#[test]
fn parabolic_head_examples() {
    let sys = a2();
    let m = Monoid::new(&sys);
    let ty = GenSet::singleton(T);
    let tt = m.braid(&[T, T]).unwrap();
    assert_eq!(m.parabolic_head_left(&tt, ty), (tt.clone(), PositiveBraid::identity()));
    let ts = m.braid(&[T, S]).unwrap();
    assert_eq!(m.parabolic_head_left(&ts, ty), (m.letter(T), m.letter(S)));
    let sts = m.braid(&[S, T, S]).unwrap();
    assert_eq!(m.parabolic_head_left(&sts, ty), (m.letter(T), m.braid(&[S, T]).unwrap()));
}

#[test]
fn chain_examples() {
    let sys = a2();
    let m = Monoid::new(&sys);
    assert_eq!(m.chain_decompose(&m.letter(S), S), None);
    let (chain, rest) = m.chain_decompose(&m.braid(&[T, S]).unwrap(), S).unwrap();
    assert_eq!(chain.simple_parts, vec![vec![T, S]]);
    assert_eq!(chain.target, T);
    assert!(rest.is_identity());

    let free = CoxeterSystem::preset("I2(inf)").unwrap();
    let mf = Monoid::new(&free);
    let (chain, rest) = mf.chain_decompose(&mf.letter(T), S).unwrap();
    assert_eq!(chain.simple_parts, vec![vec![T]]);
    assert_eq!(chain.target, S);
    assert!(rest.is_identity());
}

#[test]
fn conjugate_through_factors_examples() {
    let sys = a2();
    let m = Monoid::new(&sys);
    assert_eq!(m.conjugate_through_factors(&PositiveBraid::identity(), T), Some(vec![T]));
    assert_eq!(m.conjugate_through_factors(&m.braid(&[S, T]).unwrap(), T), Some(vec![T, S]));
    assert_eq!(m.conjugate_through_factors(&m.letter(S), T), None);
    // the letter may divide the factor: s·Δ = Δ·t
    let delta = m.braid(&[S, T, S]).unwrap();
    assert_eq!(m.conjugate_through_factors(&delta, S), Some(vec![S, T]));
    let dd = m.mul(&delta, &delta);
    assert_eq!(m.conjugate_through_factors(&dd, S), Some(vec![S, T, S]));
    assert_eq!(m.conjugate_through_factors(&m.letter(S), S), Some(vec![S, S]));
}
