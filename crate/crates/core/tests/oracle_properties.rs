use proptest::prelude::*;

use artin_core::oracle::{oracle_divides, oracle_lcm, words_equal, Reverser};
use artin_core::CoxeterSystem;

fn systems() -> Vec<CoxeterSystem> {
    ["A2", "B2", "I2(5)"].iter().map(|n| CoxeterSystem::preset(n).unwrap()).collect()
}

fn words(max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..2, 0..=max_len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Word classes and word reversing are two independent oracles.
    #[test]
    fn classes_agree_with_reversing(a in words(5), b in words(5), pick in 0usize..3) {
        let systems = systems();
        let sys = &systems[pick];
        let rev = Reverser::new(sys, 100_000);
        prop_assert_eq!(oracle_divides(sys, &a, &b, true).unwrap(), rev.left_divides(&a, &b).unwrap());
        prop_assert_eq!(oracle_divides(sys, &a, &b, false).unwrap(), rev.right_divides(&a, &b).unwrap());
        if let Some(l) = oracle_lcm(sys, &a, &b, 12).unwrap() {
            prop_assert!(rev.is_lcm_left(&a, &b, &l).unwrap());
        }
        let equal = words_equal(sys, &a, &b, 1_000_000).unwrap();
        prop_assert_eq!(equal, a.len() == b.len() && rev.left_divides(&a, &b).unwrap());
    }
}
