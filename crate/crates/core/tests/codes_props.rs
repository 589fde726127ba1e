mod common;

use proptest::prelude::*;
use rees::codes::{
    build_code, gmd_and_vasconcelos, regularity_threshold, v_number_monomial, weight_hierarchy, PointSetOverFq,
};
use rees::{Budget, Error, Graph};

fn b() -> Budget {
    Budget::default()
}

fn point_set() -> impl Strategy<Value = PointSetOverFq> {
    (prop_oneof![Just(2u8), Just(3u8)], 2usize..=3)
        // subcode enumeration over F_3 grows too fast past six points
        .prop_flat_map(|(q, s)| {
            let most = if q == 2 { 8 } else { 6 };
            (Just(q), Just(s), prop::collection::vec(prop::collection::vec(0..q, s), 2..=most))
        })
        .prop_filter_map("zero vector or repeated point", |(q, s, pts)| PointSetOverFq::new(q, s, pts).ok())
}

/// v(I(G)) as the least |A| over independent sets A whose neighbourhood meets every edge.
fn v_number_by_independent_sets(g: &Graph) -> u32 {
    let s = g.nvars();
    (0u64..1 << s)
        .filter(|&a| g.edges().iter().all(|&(u, v)| a >> u & 1 == 0 || a >> v & 1 == 0))
        .filter(|&a| {
            let n = g.neighborhood(a);
            g.edges().iter().all(|&(u, v)| n >> u & 1 == 1 || n >> v & 1 == 1)
        })
        .map(|a| a.count_ones())
        .min()
        .expect("the empty set works for a cone")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn hierarchies_are_strict_and_end_at_the_length(x in point_set()) {
        let t = regularity_threshold(&x).unwrap();
        for d in 1..=t + 1 {
            let c = build_code(&x, d).unwrap();
            let h = weight_hierarchy(&c, &b()).unwrap();
            prop_assert!(h.windows(2).all(|w| w[0] < w[1]), "{:?}", h);
            prop_assert!(*h.last().unwrap() <= x.len());
            if d >= t {
                prop_assert_eq!(h, (1..=x.len()).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn form_counts_match_weights(x in point_set(), d in 1u32..=3) {
        let c = build_code(&x, d).unwrap();
        let h = weight_hierarchy(&c, &b()).unwrap();
        for r in 1..=h.len().min(2) {
            match gmd_and_vasconcelos(&x, d, r, &b()) {
                Ok(g) => {
                    prop_assert_eq!(g.gmd, h[r - 1]);
                    prop_assert_eq!(g.vasconcelos, h[r - 1]);
                }
                Err(Error::Budget { .. }) => {}
                Err(e) => return Err(TestCaseError::fail(e.to_string())),
            }
        }
    }

    #[test]
    fn v_numbers_of_edge_ideals(g in common::graph(2..=7)) {
        let i = g.edge_ideal().unwrap();
        let r = v_number_monomial(&i, g.nvars() as u32, &b()).unwrap();
        prop_assert_eq!(r.v, v_number_by_independent_sets(&g));
        // edge ideals are never prime, so the witness has positive degree
        prop_assert!(r.v >= 1);
    }

    #[test]
    fn v_number_zero_exactly_for_primes(i in common::ideal(1..=4, 2, 4)) {
        let cap: u32 = i.max_exponents().iter().sum();
        let r = v_number_monomial(&i, cap, &b()).unwrap();
        let prime = i.generators().iter().all(|g| g.degree() == 1);
        prop_assert_eq!(r.v == 0, prime);
    }
}
