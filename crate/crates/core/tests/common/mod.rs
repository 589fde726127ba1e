//! Shared generators for the property suites.
#![allow(dead_code)]

use proptest::prelude::*;
use rees::{Clutter, ExponentVector, Graph, MonomialIdeal};

pub fn ideal(s: std::ops::RangeInclusive<usize>, max_exp: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    s.prop_flat_map(move |s| prop::collection::vec(prop::collection::vec(0..=max_exp, s), 1..=max_gens))
        .prop_filter_map("every generator was 1", |rows| {
            let gens: Vec<ExponentVector> =
                rows.into_iter().filter(|r| r.iter().any(|&e| e > 0)).map(|r| ExponentVector::new(r).unwrap()).collect();
            MonomialIdeal::new(gens).ok()
        })
}

/// Zero-dimensional ideals: every pure power present, plus mixed generators.
pub fn zero_dimensional(s: std::ops::RangeInclusive<usize>, max_exp: u32, extra: usize) -> impl Strategy<Value = MonomialIdeal> {
    s.prop_flat_map(move |s| {
        (prop::collection::vec(1..=max_exp, s), prop::collection::vec(prop::collection::vec(0..=max_exp, s), 0..=extra))
    })
    .prop_map(|(pure, mixed)| {
        let s = pure.len();
        let mut gens: Vec<ExponentVector> = (0..s)
            .map(|k| {
                let mut v = vec![0; s];
                v[k] = pure[k];
                ExponentVector::new(v).unwrap()
            })
            .collect();
        gens.extend(mixed.into_iter().filter(|r| r.iter().any(|&e| e > 0)).map(|r| ExponentVector::new(r).unwrap()));
        MonomialIdeal::new(gens).unwrap()
    })
}

/// Clutters whose edges cover every vertex.
pub fn clutter(s: std::ops::RangeInclusive<usize>, max_edges: usize) -> impl Strategy<Value = Clutter> {
    s.prop_flat_map(move |s| (Just(s), prop::collection::vec(1u64..(1 << s), 1..=max_edges)))
        .prop_filter_map("vertex outside every edge", |(s, masks)| {
            Clutter::from_masks(s, masks).ok().filter(|c| c.covers_all_vertices())
        })
}

pub fn pairs(s: usize) -> Vec<(usize, usize)> {
    (0..s).flat_map(|u| (u + 1..s).map(move |v| (u, v))).collect()
}

/// Simple graphs with at least one edge.
pub fn graph(s: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Graph> {
    s.prop_flat_map(|s| (Just(s), prop::collection::vec(any::<bool>(), s * (s - 1) / 2)))
        .prop_filter_map("no edges", |(s, keep)| {
            let edges: Vec<_> = pairs(s).into_iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| e).collect();
            if edges.is_empty() {
                None
            } else {
                Graph::new(s, &edges).ok()
            }
        })
}

/// Bipartite graphs with at least one edge.
pub fn bipartite_graph(s: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Graph> {
    s.prop_flat_map(|s| (Just(s), prop::collection::vec(any::<bool>(), s), prop::collection::vec(any::<bool>(), s * (s - 1) / 2)))
        .prop_filter_map("no edges", |(s, side, keep)| {
            let edges: Vec<_> = pairs(s)
                .into_iter()
                .zip(keep)
                .filter(|&((u, v), k)| k && side[u] != side[v])
                .map(|(e, _)| e)
                .collect();
            if edges.is_empty() {
                None
            } else {
                Graph::new(s, &edges).ok()
            }
        })
}

pub fn minimal(i: &MonomialIdeal) -> bool {
    let g = i.generators();
    (0..g.len()).all(|a| (0..g.len()).all(|b| a == b || !g[a].divides(&g[b])))
}

/// Shortest odd closed walk, by BFS over (vertex, parity).
pub fn odd_girth_oracle(g: &Graph) -> Option<usize> {
    let s = g.nvars();
    let mut best: Option<usize> = None;
    for root in 0..s {
        let mut dist = vec![[usize::MAX; 2]; s];
        dist[root][0] = 0;
        let mut queue = std::collections::VecDeque::from([(root, 0usize)]);
        while let Some((v, par)) = queue.pop_front() {
            for &(a, c) in g.edges() {
                let w = if a == v { c } else if c == v { a } else { continue };
                if dist[w][1 - par] == usize::MAX {
                    dist[w][1 - par] = dist[v][par] + 1;
                    queue.push_back((w, 1 - par));
                }
            }
        }
        if dist[root][1] != usize::MAX {
            best = Some(best.map_or(dist[root][1], |x| x.min(dist[root][1])));
        }
    }
    best
}
