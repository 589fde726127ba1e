//! Normality of I(G) read off the edge polytope, and dim K[G].

use num_traits::One;
use serde::Serialize;

use crate::arith::Int;
use crate::budget::Budget;
use crate::clutter::Graph;
use crate::closure::{is_normal, Method};
use crate::error::{inconsistent, precondition, Result};
use crate::polyhedra::{smith_invariant, Lattice, RationalCone};

use super::edge_ideal_normal;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EhrhartCriterion {
    /// K[I(G)z] = A(P_G), from the Hilbert basis of the cone over P_G × {1}.
    pub ehrhart_ring_equal: bool,
    /// At most one non-bipartite component, and that one has a normal edge ideal.
    pub component_condition: bool,
    /// I(G) normal, from the Hilbert basis of the Rees cone.
    pub ideal_normal: bool,
    pub nonbipartite_components: usize,
    /// gcd of the maximal minors of the matrix with columns (v_i, 1).
    #[serde(serialize_with = "crate::arith::serialize_int")]
    pub delta_r: Int,
    pub rank: usize,
}

impl EhrhartCriterion {
    pub fn holds(&self) -> bool {
        self.ideal_normal
    }
}

fn lifted_edges(g: &Graph) -> Vec<Vec<Int>> {
    g.edges()
        .iter()
        .map(|&(u, v)| {
            let mut e = vec![Int::from(0); g.nvars() + 1];
            e[u] += 1;
            e[v] += 1;
            e[g.nvars()] = Int::one();
            e
        })
        .collect()
}

pub fn ehrhart_normality_criterion(g: &Graph, budget: &Budget) -> Result<EhrhartCriterion> {
    if g.is_multigraph() {
        return precondition("the Ehrhart criterion is stated for simple graphs");
    }
    if g.edges().is_empty() {
        return precondition("graph has no edges");
    }
    let b = lifted_edges(g);
    let (delta_r, rank) = smith_invariant(&b, crate::polyhedra::smith::rank(&b))?;

    let mut hb = budget.scoped(|bb| RationalCone::new(b.clone())?.hilbert_basis(Lattice::Saturated, bb))?;
    hb.sort();
    let mut gens = b;
    gens.sort();
    let ehrhart_ring_equal = hb == gens;

    let nonbipartite: Vec<u64> = g.components().into_iter().filter(|&c| g.two_colouring(c).is_none()).collect();
    let c1 = nonbipartite.len();
    let component_condition = match nonbipartite.as_slice() {
        [] => true,
        [c] => edge_ideal_normal(&g.induced_subgraph(*c)?, budget)?,
        _ => false,
    };

    let ideal_normal = is_normal(&g.edge_ideal()?, Method::Hilbert, budget)?.normal;

    let expected = if c1 == 0 { Int::one() } else { Int::from(1u64 << (c1 - 1)) };
    if delta_r != expected {
        return inconsistent(format!("Δ_r = {delta_r} but 2^(c₁−1) = {expected}"));
    }
    if ehrhart_ring_equal && !delta_r.is_one() {
        return inconsistent("K[Iz] = A(P) with Δ_r ≠ 1");
    }
    if ehrhart_ring_equal != component_condition || component_condition != ideal_normal {
        return inconsistent(format!(
            "criterion disagrees: (i) {ehrhart_ring_equal}, (ii) {component_condition}, (iii) {ideal_normal}"
        ));
    }
    Ok(EhrhartCriterion {
        ehrhart_ring_equal,
        component_condition,
        ideal_normal,
        nonbipartite_components: c1,
        delta_r,
        rank,
    })
}

/// dim K[G] = s − c₀ with c₀ the number of bipartite components, checked
/// against the rank of the edge vectors.
pub fn edge_subring_dimension(g: &Graph) -> Result<usize> {
    let c0 = g.components().into_iter().filter(|&c| g.two_colouring(c).is_some()).count();
    let rows: Vec<Vec<Int>> = lifted_edges(g).into_iter().map(|mut e| {
        e.pop();
        e
    }).collect();
    let rank = crate::polyhedra::linalg::rank(&rows);
    let dim = g.nvars() - c0;
    if rank != dim {
        return inconsistent(format!("rank of the incidence matrix {rank} ≠ s − c₀ = {dim}"));
    }
    Ok(dim)
}
