use alloc::vec;

use super::*;

const S: Gen = 0;
const T: Gen = 1;

fn sys(name: &str) -> CoxeterSystem {
    CoxeterSystem::preset(name).unwrap()
}

#[test]
fn delta_data() {
    let a2 = sys("A2");
    let d = GarsideData::new(&a2, a2.all()).unwrap();
    assert_eq!(d.delta().word(), [S, T, S]);
    assert_eq!((d.sigma(S), d.sigma(T), d.epsilon()), (T, S, 2));
    let d = GarsideData::new(&a2, GenSet::singleton(S)).unwrap();
    assert_eq!((d.delta().word(), d.sigma(S), d.epsilon()), (vec![S], S, 1));
    let b2 = sys("B2");
    let d = GarsideData::new(&b2, b2.all()).unwrap();
    assert_eq!((d.delta().word(), d.epsilon()), (vec![S, T, S, T], 1));
    let a3 = sys("A3");
    assert_eq!(GarsideData::new(&a3, a3.all()).unwrap().epsilon(), 2);
    assert_eq!(GarsideData::new(&sys("I2(inf)"), GenSet::full(2)), Err(Error::NotSpherical));
}

#[test]
fn delta_is_lcm_of_the_subset() {
    for name in ["A2", "B2", "A3", "H3"] {
        let sys = sys(name);
        let m = Monoid::new(&sys);
        let d = GarsideData::new(&sys, sys.all()).unwrap();
        let lcm = |left: bool| {
            sys.all().iter().fold(PositiveBraid::identity(), |acc, s| {
                let l = m.letter(s);
                if left { m.lcm_left(&acc, &l) } else { m.lcm_right(&acc, &l) }.unwrap()
            })
        };
        assert_eq!(&lcm(true), d.delta(), "{name}");
        assert_eq!(&lcm(false), d.delta(), "{name}");
        assert_eq!(m.image(d.delta()), sys.longest_element(sys.all()).unwrap(), "{name}");
    }
}

#[test]
fn conjugation_by_delta() {
    let a2 = sys("A2");
    let m = Monoid::new(&a2);
    let d = GarsideData::new(&a2, a2.all()).unwrap();
    let s = m.letter(S);
    let image = d.conj_by_delta(&m, &s).unwrap();
    assert_eq!(image, m.letter(T));
    assert_eq!(m.mul(d.delta(), &s), m.mul(&image, d.delta()));
    let g = m.parse("s s t").unwrap();
    assert_eq!(d.conj_by_delta(&m, &d.conj_by_delta(&m, &g).unwrap()).unwrap(), g);
    let ds = GarsideData::new(&a2, GenSet::singleton(S)).unwrap();
    assert_eq!(ds.conj_by_delta(&m, &m.letter(T)), Err(Error::SupportOutsideSubset));
    let b2 = sys("B2");
    let m = Monoid::new(&b2);
    let d = GarsideData::new(&b2, b2.all()).unwrap();
    let g = m.parse("s t t").unwrap();
    assert_eq!(d.conj_by_delta(&m, &g).unwrap(), g);
}

#[test]
fn group_words() {
    let a2 = sys("A2");
    let gs = Garside::new(&a2).unwrap();
    let m = gs.monoid();
    let g = gs.parse("s t'").unwrap();
    assert_eq!((g.numerator().word(), g.denominator().word()), (vec![S], vec![T]));
    assert!(gs.parse("s s'").unwrap().is_identity());
    // t⁻¹s = a·b⁻¹ means s·b = t·a
    let g = gs.parse("t' s").unwrap();
    assert_eq!(m.mul(&m.letter(S), g.denominator()), m.mul(&m.letter(T), g.numerator()));
    assert!(m.gcd_right(g.numerator(), g.denominator()).is_identity());
    assert_eq!(gs.format(&gs.parse("1").unwrap()), "1");
    assert!(matches!(gs.parse("s q"), Err(Error::UnknownGenerator(_))));
    assert_eq!(Garside::new(&sys("I2(inf)")).unwrap_err(), Error::NotSpherical);
}

#[test]
fn arithmetic() {
    let a3 = sys("A3");
    let gs = Garside::new(&a3).unwrap();
    let g = gs.parse("s1 s2' s3 s1' s2").unwrap();
    let h = gs.parse("s3' s3' s2 s1").unwrap();
    assert!(gs.mul(&g, &g.inverse()).is_identity());
    assert_eq!(gs.mul(&gs.mul(&g, &h), &h.inverse()), g);
    let w = gs.word(&g);
    assert_eq!(gs.group_from_word(&w).unwrap(), g);
    let (c, d) = gs.left_form(&g);
    assert_eq!(gs.mul(&gs.from_positive(&c), &g), gs.from_positive(&d));
    assert!(gs.monoid().gcd_left(&c, &d).is_identity());
    // Δ² is central
    let d2 = gs.delta_power(2);
    assert_eq!(gs.conjugate(&d2, &g), g);
}

#[test]
fn delta_power_forms() {
    let a2 = sys("A2");
    let gs = Garside::new(&a2).unwrap();
    let m = gs.monoid();
    let st = m.parse("s t").unwrap();
    assert_eq!(gs.delta_power_form(&gs.from_positive(&st)), (st.clone(), 0));
    assert_eq!(gs.delta_power_form(&gs.delta_power(-1)), (PositiveBraid::identity(), -1));
    let (g1, n) = gs.delta_power_form(&gs.parse("s'").unwrap());
    assert_eq!((g1.word(), n), (vec![T, S], -1));
    let (g1, n) = gs.even_delta_power_form(&gs.parse("s'").unwrap());
    assert_eq!(n, -2);
    assert_eq!(gs.mul(&gs.from_positive(&g1), &gs.delta_power(n)), gs.parse("s'").unwrap());
    let g = gs.parse("s t s s t s t").unwrap();
    let (g1, n) = gs.delta_power_form(&g);
    assert_eq!(n, 2);
    assert_eq!(gs.mul(&gs.from_positive(&g1), &gs.delta_power(n)), g);
}
