//! v-numbers of monomial ideals through monomial witnesses, and W₂ graphs.

use serde::Serialize;

use crate::budget::Budget;
use crate::clutter::{bits, Graph};
use crate::error::{inconsistent, precondition, Error, Result};
use crate::monomial::{monomials_of_degree, ExponentVector, MonomialIdeal, Reduced};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialVNumber {
    pub v: u32,
    /// f with (I : f) prime; written as space-separated exponents.
    #[serde(serialize_with = "serialize_vector")]
    pub witness: ExponentVector,
    /// 0-based variables generating (I : f).
    pub prime: Vec<usize>,
}

fn serialize_vector<S: serde::Serializer>(v: &ExponentVector, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// (I : t^a) when it is generated by variables.
fn prime_colon(i: &MonomialIdeal, a: &ExponentVector) -> Result<Option<Vec<usize>>> {
    match i.colon(a)? {
        Reduced::Proper(j) if j.generators().iter().all(|g| g.degree() == 1) => Ok(Some(
            j.generators()
                .iter()
                .map(|g| g.entries().iter().position(|&e| e == 1).expect("degree one"))
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect(),
        )),
        _ => Ok(None),
    }
}

/// Smallest degree of a monomial f with (I : f) prime, searched degree by
/// degree up to `cap`. A colon that is prime is automatically an associated
/// prime, so no primary decomposition is needed. Exponents beyond the largest
/// generator exponent never change a colon and are skipped.
pub fn v_number_monomial(i: &MonomialIdeal, cap: u32, budget: &Budget) -> Result<MonomialVNumber> {
    let s = i.nvars();
    if s > 64 {
        return precondition("at most 64 variables");
    }
    let max = i.max_exponents();
    let all = if s == 64 { u64::MAX } else { (1u64 << s) - 1 };
    for d in 0..=cap {
        for a in monomials_of_degree(s, all, d) {
            if a.entries().iter().zip(&max).any(|(e, m)| e > m) {
                continue;
            }
            budget.charge_points(1)?;
            if let Some(prime) = prime_colon(i, &a)? {
                return Ok(MonomialVNumber { v: d, witness: a, prime });
            }
        }
    }
    Err(Error::CapExceeded(cap))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct W2Report {
    pub well_covered: bool,
    /// G ∖ v is well-covered for every vertex v.
    pub deletions_well_covered: bool,
    pub v_number: MonomialVNumber,
    /// dim S/I(G) = s − α₀(G).
    pub dimension: usize,
    pub in_w2: bool,
}

/// Decides W₂ membership twice: combinatorially and by v(I(G)) = dim S/I(G).
/// The two must agree.
pub fn w2_test(g: &Graph, budget: &Budget) -> Result<W2Report> {
    if g.loops() != 0 {
        return precondition("graph has loops");
    }
    if g.isolated_vertices() != 0 {
        return precondition("graph has isolated vertices");
    }
    let s = g.nvars();
    let clutter = g.clutter()?;
    budget.check_search_vertices(s)?;
    let well_covered = g.is_well_covered()?;
    let mut deletions_well_covered = true;
    for v in bits(g.all_vertices()) {
        if !g.induced_subgraph(g.all_vertices() & !(1 << v))?.is_well_covered()? {
            deletions_well_covered = false;
            break;
        }
    }
    let combinatorial = well_covered && deletions_well_covered;
    let dimension = s - clutter.covering_number(budget)?;
    let v_number = v_number_monomial(&g.edge_ideal()?, s as u32, budget)?;
    let algebraic = v_number.v as usize == dimension;
    if combinatorial != algebraic {
        return inconsistent(format!(
            "W₂ combinatorially {combinatorial} but v = {} and dim = {dimension}",
            v_number.v
        ));
    }
    Ok(W2Report { well_covered, deletions_well_covered, v_number, dimension, in_w2: combinatorial })
}
