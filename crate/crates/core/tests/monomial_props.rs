mod common;

use proptest::prelude::*;
use rees::clutter::has_packing_property;
use rees::monomial::Reduced;
use rees::{Budget, ExponentVector, Graph, MonomialIdeal};

fn colon(i: &MonomialIdeal, a: &ExponentVector) -> Reduced {
    i.colon(a).unwrap()
}

fn vector(s: usize, max: u32) -> impl Strategy<Value = ExponentVector> {
    prop::collection::vec(0..=max, s).prop_map(|v| ExponentVector::new(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn operations_return_minimal_generators(
        (i, j) in (2usize..=4).prop_flat_map(|s| (common::ideal(s..=s, 3, 4), common::ideal(s..=s, 3, 4)))
    ) {
        prop_assert!(common::minimal(&i));
        for k in [i.power(2).unwrap(), i.product(&j).unwrap(), i.intersection(&j).unwrap(), i.sum(&j).unwrap()] {
            prop_assert!(common::minimal(&k));
        }
        if let Reduced::Proper(c) = colon(&i, &j.generators()[0]) {
            prop_assert!(common::minimal(&c));
        }
    }

    #[test]
    fn colon_composes(
        (i, a, b) in (1usize..=4).prop_flat_map(|s| (common::ideal(s..=s, 3, 4), vector(s, 2), vector(s, 2)))
    ) {
        let ab = a.checked_add(&b).unwrap();
        let direct = colon(&i, &ab);
        let stepwise = match colon(&i, &a) {
            Reduced::Proper(j) => colon(&j, &b),
            other => other,
        };
        prop_assert_eq!(stepwise, direct);
    }

    #[test]
    fn alexander_dual_is_an_involution(c in common::clutter(2..=8, 6)) {
        let i = c.to_ideal();
        let dual = i.alexander_dual().unwrap();
        prop_assert_eq!(dual.alexander_dual().unwrap(), i);
    }

    #[test]
    fn covering_number_is_the_smallest_blocker_edge(c in common::clutter(2..=8, 6)) {
        let smallest = c.blocker().edges().iter().map(|e| e.count_ones() as usize).min().unwrap();
        prop_assert_eq!(c.covering_number(&Budget::default()).unwrap(), smallest);
        // and the blocker of the blocker is the clutter again
        prop_assert_eq!(c.blocker().blocker(), c);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn bipartite_graphs_pack(g in common::bipartite_graph(2..=8)) {
        prop_assert!(has_packing_property(&g.edge_ideal().unwrap(), &Budget::default()).unwrap());
    }
}

#[test]
fn ten_vertex_bipartite_graphs_pack() {
    let b = Budget::default();
    let c10 = Graph::cycle(10).edge_ideal().unwrap();
    assert!(has_packing_property(&c10, &b).unwrap());
    let edges: Vec<(usize, usize)> = (0..5).flat_map(|u| (5..10).filter(move |v| (u + v) % 3 != 0).map(move |v| (u, v))).collect();
    let g = Graph::new(10, &edges).unwrap();
    assert!(g.is_bipartite());
    assert!(has_packing_property(&g.edge_ideal().unwrap(), &Budget::default()).unwrap());
}
