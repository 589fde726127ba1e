mod common;

use proptest::prelude::*;
use rees::closure::{closure_of_power, incidence_rank, is_normal, membership, Method};
use rees::invariants::{
    is_m_full_2var, multiplicity, multiplicity_by_hilbert_function, normalization_hilbert_function, subring_regularity,
};
use rees::{Budget, ExponentVector, MonomialIdeal};

fn b() -> Budget {
    Budget::default()
}

fn squarefree_of_degree(s: usize, k: usize) -> Vec<ExponentVector> {
    (0u64..1 << s).filter(|m| m.count_ones() as usize == k).map(|m| ExponentVector::from_mask(s, m)).collect()
}

/// Monomials outside closure(Iⁿ), counted one LP at a time.
fn colength_by_lp(i: &MonomialIdeal, n: u32) -> u64 {
    let pure = i.pure_powers().unwrap();
    let mut count = 0;
    let mut a = vec![0u32; i.nvars()];
    loop {
        if !membership(&ExponentVector::new(a.clone()).unwrap(), i, n).unwrap().member {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == a.len() {
                return count;
            }
            a[k] += 1;
            if a[k] < n * pure[k] {
                break;
            }
            a[k] = 0;
            k += 1;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn multiplicity_by_volume_and_by_counts(i in common::zero_dimensional(1..=3, 6, 3)) {
        prop_assert_eq!(multiplicity(&i, &b()).unwrap(), multiplicity_by_hilbert_function(&i, &b()).unwrap());
    }

    #[test]
    fn normalization_hilbert_function_by_lp(i in common::zero_dimensional(1..=3, 3, 2), n in 1u32..=3) {
        prop_assert_eq!(normalization_hilbert_function(&i, n, &b()).unwrap(), colength_by_lp(&i, n));
    }

    #[test]
    fn complete_two_variable_ideals_are_m_full(i in common::zero_dimensional(2..=2, 9, 3)) {
        let c = closure_of_power(&i, 1, &b()).unwrap();
        prop_assert!(is_m_full_2var(&c).unwrap());
    }

    #[test]
    fn a_invariant_bound(
        (s, k, masks) in (2usize..=3).prop_flat_map(|k| (2 * k..=7).prop_map(move |s| (s, k)))
            .prop_flat_map(|(s, k)| (Just(s), Just(k), prop::collection::vec(0..squarefree_of_degree(s, k).len(), 2..=8)))
    ) {
        let all = squarefree_of_degree(s, k);
        let i = MonomialIdeal::new(masks.iter().map(|&m| all[m].clone()).collect()).unwrap();
        prop_assume!(incidence_rank(&i) == s);
        prop_assume!(is_normal(&i, Method::Hilbert, &b()).unwrap().normal);
        let r = subring_regularity(&i, &b()).unwrap();
        prop_assert!(r.a_invariant <= -(s.div_ceil(k) as i64), "a = {} for s = {s}, k = {k}", r.a_invariant);
    }
}

#[test]
fn squarefree_veronese_regularity() {
    for s in 4..=8usize {
        for k in 2..=s / 2 {
            let i = MonomialIdeal::new(squarefree_of_degree(s, k)).unwrap();
            let r = subring_regularity(&i, &b()).unwrap();
            assert_eq!(r.regularity as i64, s as i64 - s.div_ceil(k) as i64, "s = {s}, k = {k}");
            assert_eq!(r.a_invariant, -(s.div_ceil(k) as i64));
        }
    }
}
