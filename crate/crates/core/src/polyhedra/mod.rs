//! Exact polyhedral kernel.

pub mod cone;
pub mod dd;
pub mod lattice;
pub mod linalg;
pub mod lp;
pub mod polytope;
pub mod smith;

use num_traits::{One, Signed, Zero};

use crate::arith::{Int, Rat};
use crate::error::{precondition, Result};
use crate::monomial::MonomialIdeal;

pub use cone::{ConeConstraints, Lattice, RationalCone};
pub use lp::{lp_optimize, LpSolution, Sense};
pub use polytope::{EhrhartData, Inequality, LatticePolytope, RationalPolyhedron, VertexData};
pub use smith::smith_invariant;

/// Q(I) = {x ≥ 0 : ⟨x, vⱼ⟩ ≥ 1 for every generator vⱼ}.
pub fn covering_polyhedron(i: &MonomialIdeal) -> Result<RationalPolyhedron> {
    let s = i.nvars();
    let used = i.generators().iter().fold(0u64, |m, g| m | g.support_mask());
    if (0..s).any(|k| used & (1 << k) == 0) {
        return precondition("incidence matrix has a zero row");
    }
    let mut ineq = Vec::with_capacity(s + i.len());
    for k in 0..s {
        let mut e = vec![Rat::zero(); s];
        e[k] = Rat::one();
        ineq.push(Inequality::new(e, Rat::zero()));
    }
    for g in i.generators() {
        ineq.push(Inequality::new(
            g.entries().iter().map(|&x| Rat::from_integer(Int::from(x))).collect(),
            Rat::one(),
        ));
    }
    RationalPolyhedron::new(s, ineq)
}

/// Generators of RC(I): (eᵢ, 0) for every variable and (vⱼ, 1) for every generator.
pub fn rees_cone_generators(i: &MonomialIdeal) -> Vec<Vec<Int>> {
    let s = i.nvars();
    let mut gens: Vec<Vec<Int>> = (0..s)
        .map(|k| (0..=s).map(|j| if j == k { Int::one() } else { Int::zero() }).collect())
        .collect();
    for g in i.generators() {
        let mut v: Vec<Int> = g.entries().iter().map(|&x| Int::from(x)).collect();
        v.push(Int::one());
        gens.push(v);
    }
    gens
}

pub fn rees_cone(i: &MonomialIdeal) -> RationalCone {
    RationalCone::new(rees_cone_generators(i)).expect("unit vectors are non-zero")
}

/// Facet description of the Rees cone split into the coordinate facets and
/// the normals (γ, −d) with d ≥ 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReesRepresentation {
    /// Coordinates k (0-based, k = s is the z coordinate) with eₖ a facet normal.
    pub unit_facets: Vec<usize>,
    /// (γ, d), integral ones (d = 1) first, then by d and γ.
    pub normals: Vec<(Vec<Int>, Int)>,
}

impl ReesRepresentation {
    /// r: number of normals with d = 1.
    pub fn r(&self) -> usize {
        self.normals.iter().filter(|(_, d)| d.is_one()).count()
    }

    /// p: number of normals with d ≥ 1.
    pub fn p(&self) -> usize {
        self.normals.len()
    }
}

pub fn rees_cone_representation(i: &MonomialIdeal) -> Result<ReesRepresentation> {
    let s = i.nvars();
    if (0..s).any(|k| i.generators().iter().all(|g| g.entries()[k] > 0)) {
        return precondition("ideal has height one");
    }
    let c = rees_cone(i).constraints()?;
    let mut unit_facets = Vec::new();
    let mut normals = Vec::new();
    for f in c.inequalities {
        let last = f[s].clone();
        if last.is_negative() {
            normals.push((f[..s].to_vec(), -last));
        } else if let Some(k) = unit_index(&f) {
            unit_facets.push(k);
        } else {
            return crate::error::inconsistent("unexpected Rees cone facet");
        }
    }
    unit_facets.sort_unstable();
    normals.sort_by(|a, b| (&a.1, &a.0).cmp(&(&b.1, &b.0)));
    Ok(ReesRepresentation { unit_facets, normals })
}

fn unit_index(f: &[Int]) -> Option<usize> {
    let nz: Vec<usize> = (0..f.len()).filter(|&k| !f[k].is_zero()).collect();
    (nz.len() == 1 && f[nz[0]].is_one()).then(|| nz[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn c(n: usize) -> MonomialIdeal {
        crate::clutter::Graph::cycle(n).edge_ideal().unwrap()
    }

    #[test]
    fn square_covering_polyhedron_is_integral() {
        let vd = covering_polyhedron(&c(4)).unwrap().vertex_data().unwrap();
        assert!(vd.is_integral());
        assert_eq!(vd.vertices.len(), 2);
        let rep = rees_cone_representation(&c(4)).unwrap();
        assert_eq!(rep.r(), rep.p());
        assert_eq!(rep.r(), 2);
    }

    #[test]
    fn triangle_has_half_vertex_and_d_two() {
        let vd = covering_polyhedron(&c(3)).unwrap().vertex_data().unwrap();
        assert!(vd.vertices.contains(&vec![rat(1, 2); 3]));
        let rep = rees_cone_representation(&c(3)).unwrap();
        assert_eq!(rep.r(), 3);
        assert_eq!(rep.p(), 4);
        assert!(rep.normals.iter().any(|(g, d)| *d == Int::from(2) && g.iter().all(|x| x.is_one())));
        assert_eq!(rep.unit_facets, vec![0, 1, 2, 3]);
    }

    #[test]
    fn height_one_is_rejected() {
        let i = MonomialIdeal::from_rows(&[&[1]]).unwrap();
        assert!(rees_cone_representation(&i).is_err());
    }

    #[test]
    fn lp_examples() {
        let a = vec![vec![rat(2, 1), rat(0, 1)], vec![rat(0, 1), rat(2, 1)]];
        let sol = lp_optimize(&a, &[rat(1, 1), rat(1, 1)], Sense::Max).unwrap();
        assert_eq!(sol.value, rat(1, 1));
    }
}
