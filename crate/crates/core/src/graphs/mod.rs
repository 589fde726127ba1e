//! Graph criteria for edge ideals and edge subrings: induced odd cycles,
//! Hochster configurations, bowties, odd girth.

mod cm;
mod ehrhart;

pub use cm::{cm_bipartite, cm_tree, is_unmixed, unmixed_bipartite_check};
pub use ehrhart::{edge_subring_dimension, ehrhart_normality_criterion, EhrhartCriterion};

use std::collections::VecDeque;

use crate::budget::Budget;
use crate::clutter::{bits, Graph};
use crate::error::{precondition, Result};
use crate::monomial::ExponentVector;
use crate::polyhedra::{Lattice, RationalCone};

/// A cycle given by its vertex sequence; loops are cycles of length one.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleRecord {
    pub vertices: Vec<usize>,
    pub induced: bool,
}

impl CycleRecord {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.vertices.len() % 2 == 1
    }

    pub fn mask(&self) -> u64 {
        self.vertices.iter().fold(0, |m, &v| m | (1 << v))
    }

    /// Consecutive vertices adjacent and, when flagged induced, no chords.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let n = self.vertices.len();
        if n == 1 {
            return g.has_edge(self.vertices[0], self.vertices[0]);
        }
        let consecutive = (0..n).all(|i| g.has_edge(self.vertices[i], self.vertices[(i + 1) % n]));
        let chordless = (0..n).all(|i| {
            (i + 2..n).all(|j| (i == 0 && j == n - 1) || !g.has_edge(self.vertices[i], self.vertices[j]))
        });
        consecutive && (!self.induced || chordless)
    }
}

/// All induced odd cycles (loops included), each listed once, starting at its
/// least vertex with the smaller neighbour second.
pub fn induced_odd_cycles(g: &Graph, budget: &Budget) -> Result<Vec<CycleRecord>> {
    budget.check_cycle_vertices(g.nvars())?;
    let mut out: Vec<CycleRecord> = bits(g.loops())
        .map(|v| CycleRecord { vertices: vec![v], induced: true })
        .collect();
    let adj: Vec<u64> = (0..g.nvars()).map(|v| g.neighbors(v) & !(1 << v)).collect();
    for start in 0..g.nvars() {
        let mut path = vec![start];
        extend(&adj, start, &mut path, 1 << start, budget, &mut out)?;
    }
    out.sort_by(|a, b| (a.len(), &a.vertices).cmp(&(b.len(), &b.vertices)));
    Ok(out)
}

// `interior` = path vertices other than the last one.
fn extend(
    adj: &[u64],
    start: usize,
    path: &mut Vec<usize>,
    on_path: u64,
    budget: &Budget,
    out: &mut Vec<CycleRecord>,
) -> Result<()> {
    budget.charge_cycles(1)?;
    let last = *path.last().unwrap();
    let interior = on_path & !(1 << last) & !(1 << start);
    let above = !((1u64 << start) | ((1u64 << start) - 1));
    for w in bits(adj[last] & above & !on_path) {
        if adj[w] & interior != 0 {
            continue;
        }
        let closes = path.len() >= 2 && adj[w] >> start & 1 == 1;
        if closes {
            if path.len() % 2 == 0 && path[1] < w {
                let mut vertices = path.clone();
                vertices.push(w);
                out.push(CycleRecord { vertices, induced: true });
            }
            continue;
        }
        path.push(w);
        extend(adj, start, path, on_path | (1 << w), budget, out)?;
        path.pop();
    }
    Ok(())
}

fn product_monomial(s: usize, cycles: &[&CycleRecord]) -> ExponentVector {
    let mut e = vec![0u32; s];
    for c in cycles {
        for &v in &c.vertices {
            e[v] += 1;
        }
    }
    ExponentVector::new(e).expect("s ≥ 1")
}

/// Two induced odd cycles with C₁ ∩ N_G(C₂) = ∅.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HochsterConfiguration {
    pub first: CycleRecord,
    pub second: CycleRecord,
}

impl HochsterConfiguration {
    /// M_{C₁,C₂} with its z-degree (|C₁| + |C₂|)/2.
    pub fn monomial(&self, s: usize) -> (ExponentVector, u32) {
        let z = (self.first.len() + self.second.len()) / 2;
        (product_monomial(s, &[&self.first, &self.second]), z as u32)
    }
}

pub fn hochster_configurations(g: &Graph, budget: &Budget) -> Result<Vec<HochsterConfiguration>> {
    let cycles = induced_odd_cycles(g, budget)?;
    let mut out = Vec::new();
    for (i, c1) in cycles.iter().enumerate() {
        for c2 in &cycles[i + 1..] {
            if c1.mask() & g.neighborhood(c2.mask()) == 0 {
                out.push(HochsterConfiguration { first: c1.clone(), second: c2.clone() });
            }
        }
    }
    Ok(out)
}

/// I(G) is normal iff G has no Hochster configuration.
pub fn edge_ideal_normal(g: &Graph, budget: &Budget) -> Result<bool> {
    Ok(hochster_configurations(g, budget)?.is_empty())
}

/// The monomials M_{C₁,C₂}z^{(|C₁|+|C₂|)/2} adjoined to S[Iz] to reach its closure.
pub fn rees_closure_generators(g: &Graph, budget: &Budget) -> Result<Vec<(ExponentVector, u32)>> {
    let mut out: Vec<(ExponentVector, u32)> = hochster_configurations(g, budget)?
        .iter()
        .map(|h| h.monomial(g.nvars()))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Two induced odd cycles meeting in at most one vertex; disjoint cycles come
/// with a path meeting each of them in one end vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bowtie {
    pub first: CycleRecord,
    pub second: CycleRecord,
    /// Empty when the cycles share a vertex.
    pub path: Vec<usize>,
}

impl Bowtie {
    pub fn monomial(&self, s: usize) -> ExponentVector {
        product_monomial(s, &[&self.first, &self.second])
    }
}

/// Shortest path from C₁ to C₂ whose interior avoids both cycles.
fn joining_path(g: &Graph, c1: u64, c2: u64) -> Option<Vec<usize>> {
    let s = g.nvars();
    let mut parent = vec![usize::MAX; s];
    let mut seen = c1;
    let mut queue: VecDeque<usize> = bits(c1).collect();
    while let Some(v) = queue.pop_front() {
        for w in bits(g.neighbors(v) & !seen) {
            parent[w] = v;
            if c2 >> w & 1 == 1 {
                let mut path = vec![w];
                let mut cur = w;
                while c1 >> cur & 1 == 0 {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            seen |= 1 << w;
            queue.push_back(w);
        }
    }
    None
}

pub fn bowties(g: &Graph, budget: &Budget) -> Result<Vec<Bowtie>> {
    let cycles = induced_odd_cycles(g, budget)?;
    let mut out = Vec::new();
    for (i, c1) in cycles.iter().enumerate() {
        for c2 in &cycles[i + 1..] {
            let common = (c1.mask() & c2.mask()).count_ones();
            if common == 1 {
                out.push(Bowtie { first: c1.clone(), second: c2.clone(), path: Vec::new() });
            } else if common == 0 {
                if let Some(path) = joining_path(g, c1.mask(), c2.mask()) {
                    out.push(Bowtie { first: c1.clone(), second: c2.clone(), path });
                }
            }
        }
    }
    Ok(out)
}

fn edge_vectors(g: &Graph) -> Vec<ExponentVector> {
    g.edges()
        .iter()
        .map(|&(u, v)| {
            let mut e = vec![0u32; g.nvars()];
            e[u] += 1;
            e[v] += 1;
            ExponentVector::new(e).expect("s ≥ 1")
        })
        .collect()
}

/// Generators of the normalization of K[G]: the edges and every M_w.
pub fn edge_subring_closure(g: &Graph, budget: &Budget) -> Result<Vec<ExponentVector>> {
    let mut out = edge_vectors(g);
    out.extend(bowties(g, budget)?.iter().map(|b| b.monomial(g.nvars())));
    out.sort();
    out.dedup();
    Ok(out)
}

fn edge_cone(g: &Graph) -> Result<RationalCone> {
    if g.edges().is_empty() {
        return precondition("graph has no edges");
    }
    RationalCone::from_u32(&edge_vectors(g).into_iter().map(|e| e.into_entries()).collect::<Vec<_>>())
}

/// Hilbert basis of ℝ₊A ∩ ℤA for the edge vectors A.
pub fn edge_subring_hilbert_basis(g: &Graph, budget: &Budget) -> Result<Vec<ExponentVector>> {
    let hb = edge_cone(g)?.hilbert_basis(Lattice::Generated, budget)?;
    hb.into_iter()
        .map(|v| {
            let e = v
                .iter()
                .map(|x| u32::try_from(x).map_err(|_| crate::error::Error::Overflow("exponent")))
                .collect::<Result<Vec<u32>>>()?;
            ExponentVector::new(e)
        })
        .collect()
}

/// Whether a generating family of the normalization agrees with the Hilbert
/// basis: every basis element occurs and every member lies in ℝ₊A ∩ ℤA.
pub fn closure_matches_hilbert_basis(g: &Graph, family: &[ExponentVector], budget: &Budget) -> Result<bool> {
    let cone = edge_cone(g)?;
    let hb = edge_subring_hilbert_basis(g, budget)?;
    if !hb.iter().all(|h| family.contains(h)) {
        return Ok(false);
    }
    let constraints = cone.constraints()?;
    for f in family {
        let x: Vec<crate::arith::Int> = f.entries().iter().map(|&e| e.into()).collect();
        if !constraints.contains(&x) || !cone.in_lattice(&x, Lattice::Generated) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every two vertex-disjoint odd cycles are joined by an edge (induced cycles suffice).
pub fn odd_cycle_condition(g: &Graph, budget: &Budget) -> Result<bool> {
    let cycles = induced_odd_cycles(g, budget)?;
    for (i, c1) in cycles.iter().enumerate() {
        for c2 in &cycles[i + 1..] {
            if c1.mask() & c2.mask() == 0 && g.neighborhood(c1.mask()) & c2.mask() == 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// For connected G, K[G] is normal iff G has the odd cycle condition.
pub fn edge_subring_normal(g: &Graph, budget: &Budget) -> Result<bool> {
    if !g.is_connected() {
        return precondition("the odd cycle criterion needs a connected graph");
    }
    odd_cycle_condition(g, budget)
}

/// Normality of K[G] straight from the Hilbert basis.
pub fn edge_subring_normal_by_hilbert_basis(g: &Graph, budget: &Budget) -> Result<bool> {
    let mut edges = edge_vectors(g);
    edges.sort();
    Ok(edge_subring_hilbert_basis(g, budget)? == edges)
}

/// Length of a shortest odd cycle, None for bipartite graphs.
pub fn odd_girth(g: &Graph) -> Option<usize> {
    if g.loops() != 0 {
        return Some(1);
    }
    let s = g.nvars();
    let mut best: Option<usize> = None;
    for root in 0..s {
        let mut dist = vec![usize::MAX; s];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for w in bits(g.neighbors(v)) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                } else if dist[w] == dist[v] {
                    let len = 2 * dist[v] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// r₀ with 2r₀ − 1 the odd girth; None ("never fails") for bipartite graphs.
pub fn simis_failure_degree(g: &Graph) -> Option<u32> {
    odd_girth(g).map(|k| k.div_ceil(2) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(s: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(s, e).unwrap()
    }

    fn two_triangles() -> Graph {
        graph(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    }

    fn fig1() -> Graph {
        // 5-cycle t1..t5, path t5 t6 t7, triangle t7 t8 t9 (0-based)
        graph(9, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5), (5, 6), (6, 7), (6, 8), (7, 8)])
    }

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn cycles_of_small_graphs() {
        assert!(induced_odd_cycles(&Graph::cycle(4), &b()).unwrap().is_empty());
        let c5 = induced_odd_cycles(&Graph::cycle(5), &b()).unwrap();
        assert_eq!(c5.len(), 1);
        assert_eq!(c5[0].vertices, vec![0, 1, 2, 3, 4]);
        // K4 has four triangles and no induced longer cycle
        let k4 = induced_odd_cycles(&Graph::complete(4), &b()).unwrap();
        assert_eq!(k4.len(), 4);
        // C5 plus a chord: triangle and the induced 4-cycle, only the triangle is odd
        let g = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]);
        let cyc = induced_odd_cycles(&g, &b()).unwrap();
        assert_eq!(cyc.len(), 1);
        assert!(cyc.iter().all(|c| c.is_valid_in(&g)));
    }

    #[test]
    fn hochster_examples() {
        assert!(hochster_configurations(&Graph::cycle(4), &b()).unwrap().is_empty());
        let h = hochster_configurations(&two_triangles(), &b()).unwrap();
        assert_eq!(h.len(), 1);
        let gens = rees_closure_generators(&two_triangles(), &b()).unwrap();
        assert_eq!(gens, vec![(ExponentVector::new(vec![1; 6]).unwrap(), 3)]);
        assert!(edge_ideal_normal(&Graph::complete(5), &b()).unwrap());
        let joined = graph(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]);
        assert!(rees_closure_generators(&joined, &b()).unwrap().is_empty());
        // the path in the bowtie graph supplies neighbours, but the 5-cycle and the
        // triangle are at distance two: a Hochster configuration
        assert_eq!(hochster_configurations(&fig1(), &b()).unwrap().len(), 1);
    }

    #[test]
    fn bowtie_of_figure_one() {
        let bt = bowties(&fig1(), &b()).unwrap();
        assert_eq!(bt.len(), 1);
        // the triangle sorts first, so the path runs t7 → t6 → t5
        assert_eq!(bt[0].path, vec![6, 5, 4]);
        assert_eq!(bt[0].monomial(9).entries(), &[1, 1, 1, 1, 1, 0, 1, 1, 1]);
        let closure = edge_subring_closure(&fig1(), &b()).unwrap();
        assert!(closure_matches_hilbert_basis(&fig1(), &closure, &b()).unwrap());
        assert!(!edge_subring_normal(&fig1(), &b()).unwrap());
    }

    #[test]
    fn two_triangles_subring_normal_rees_not() {
        let g = two_triangles();
        assert!(bowties(&g, &b()).unwrap().is_empty());
        assert!(edge_subring_normal_by_hilbert_basis(&g, &b()).unwrap());
        assert!(!odd_cycle_condition(&g, &b()).unwrap());
        assert!(!edge_ideal_normal(&g, &b()).unwrap());
    }

    #[test]
    fn odd_girth_examples() {
        assert_eq!(odd_girth(&Graph::cycle(5)), Some(5));
        assert_eq!(simis_failure_degree(&Graph::cycle(5)), Some(3));
        assert_eq!(simis_failure_degree(&Graph::cycle(3)), Some(2));
        assert_eq!(simis_failure_degree(&Graph::cycle(4)), None);
        let g = Graph::new_multigraph(2, &[(0, 1), (0, 0)]).unwrap();
        assert_eq!(odd_girth(&g), Some(1));
    }

    #[test]
    fn loops_count_as_odd_cycles() {
        let g = Graph::new_multigraph(3, &[(0, 0), (2, 2), (0, 1), (1, 2)]).unwrap();
        let h = hochster_configurations(&g, &b()).unwrap();
        assert_eq!(h.len(), 1);
        assert_eq!(h[0].monomial(3), (ExponentVector::new(vec![1, 0, 1]).unwrap(), 1));
    }
}
