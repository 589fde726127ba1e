mod common;

use proptest::prelude::*;
use rees::closure::{closure_of_power, denominator_lcm, is_normal, membership, power_oracle, Method};
use rees::{Budget, ExponentVector, MonomialIdeal};

fn b() -> Budget {
    Budget::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn lp_membership_matches_powers(
        (i, a, n) in (1usize..=4).prop_flat_map(|s| (
            common::ideal(s..=s, 3, 4),
            prop::collection::vec(0u32..=6, s),
            1u32..=3,
        ))
    ) {
        let a = ExponentVector::new(a).unwrap();
        let m = membership(&a, &i, n).unwrap();
        let p0 = denominator_lcm(&m.witness);
        // the oracle expands I^(pn) for every p ≤ p0, which explodes for large denominators
        prop_assume!(p0 <= 6);
        prop_assert_eq!(m.member, power_oracle(&a, &i, n, p0).unwrap());
    }

    #[test]
    fn closures_contain_powers_and_multiply(i in common::ideal(1..=3, 3, 3)) {
        let c: Vec<MonomialIdeal> = (1..=3).map(|n| closure_of_power(&i, n, &b()).unwrap()).collect();
        for n in 1..=3u32 {
            prop_assert!(c[n as usize - 1].contains_ideal(&i.power(n).unwrap()));
        }
        prop_assert!(c[1].contains_ideal(&c[0].product(&c[0]).unwrap()));
        prop_assert!(c[2].contains_ideal(&c[0].product(&c[1]).unwrap()));
    }

    #[test]
    fn normality_methods_agree(i in common::ideal(1..=4, 3, 4)) {
        let h = is_normal(&i, Method::Hilbert, &b()).unwrap();
        let p = is_normal(&i, Method::Powers, &b()).unwrap();
        prop_assert_eq!(h.normal, p.normal);
        prop_assert_eq!(h.failure.map(|f| f.power), p.failure.map(|f| f.power));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn closures_stabilize_from_s_on(i in common::ideal(1..=3, 2, 3)) {
        let s = i.nvars() as u32;
        for n in s.max(2)..=s + 2 {
            let c = closure_of_power(&i, n, &b()).unwrap();
            let prev = closure_of_power(&i, n - 1, &b()).unwrap();
            prop_assert_eq!(c, i.product(&prev).unwrap(), "n = {}", n);
        }
    }
}
