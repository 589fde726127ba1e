mod common;

use proptest::prelude::*;
use rees::clutter::has_packing_property;
use rees::symbolic::{covering_polyhedron_integral, has_mfmc, ic_resurgence, is_simis, symbolic_rees_generators, SymbolicPowerCache};
use rees::Budget;

fn b() -> Budget {
    Budget::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn symbolic_powers_contain_powers_and_multiply(c in common::clutter(2..=6, 5)) {
        let i = c.to_ideal();
        let budget = b();
        let mut cache = SymbolicPowerCache::new(&i, &budget).unwrap();
        let p: Vec<_> = (1..=4).map(|n| cache.get(n, &budget).unwrap().clone()).collect();
        for n in 1..=4u32 {
            prop_assert!(p[n as usize - 1].contains_ideal(&i.power(n).unwrap()));
        }
        for (n, m) in [(1, 1), (1, 2), (2, 2), (1, 3)] {
            prop_assert!(p[n + m - 1].contains_ideal(&p[n - 1].product(&p[m - 1]).unwrap()));
        }
    }

    #[test]
    fn duality_of_resurgence_and_integrality(c in common::clutter(2..=7, 6)) {
        let i = c.to_ideal();
        let dual = i.alexander_dual().unwrap();
        let r = ic_resurgence(&i, &b()).unwrap();
        prop_assert_eq!(&r.rho_ic, &ic_resurgence(&dual, &b()).unwrap().rho_ic);
        prop_assert_eq!(covering_polyhedron_integral(&i).unwrap(), covering_polyhedron_integral(&dual).unwrap());
    }

    #[test]
    fn mfmc_implies_packing(c in common::clutter(2..=6, 5)) {
        let i = c.to_ideal();
        if has_mfmc(&i, &b()).unwrap() {
            prop_assert!(has_packing_property(&i, &b()).unwrap());
        }
    }

    #[test]
    fn simis_cone_generators_are_symbolic(c in common::clutter(2..=5, 4)) {
        let i = c.to_ideal();
        let covers = c.minimal_covers();
        for (a, n) in symbolic_rees_generators(&i, &b()).unwrap() {
            for &u in &covers {
                let dot: u32 = (0..i.nvars()).filter(|k| u >> k & 1 == 1).map(|k| a.entries()[k]).sum();
                prop_assert!(dot >= n, "{} at level {} misses the cover {:b}", a, n, u);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn simis_edge_ideals_are_bipartite(g in common::graph(2..=8)) {
        prop_assume!(g.isolated_vertices() == 0);
        let simis = is_simis(&g.edge_ideal().unwrap(), &b()).unwrap();
        prop_assert_eq!(simis, common::odd_girth_oracle(&g).is_none());
    }
}
