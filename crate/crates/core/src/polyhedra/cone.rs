//! Rational cones given by integer generators: facets, placing triangulation,
//! Hilbert bases.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{dot, make_primitive, primitive_from_rats, to_i128, Int, Rat};
use crate::budget::Budget;
use crate::error::{precondition, Error, Result};
use crate::polyhedra::dd::extreme_rays;
use crate::polyhedra::lattice::{column_echelon, integer_kernel, lattice_basis, saturation_basis, Coordinates};
use crate::polyhedra::linalg::{determinant, hyperplane_normal, independent_subset, integer_inverse, transpose};
use crate::polyhedra::lp::maximize;

/// Which lattice a Hilbert basis is taken in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lattice {
    /// ℤⁿ ∩ span of the generators.
    Saturated,
    /// The group generated by the generators.
    Generated,
}

/// Linear description of a cone: `equations·x = 0`, `inequalities·x ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeConstraints {
    pub equations: Vec<Vec<Int>>,
    pub inequalities: Vec<Vec<Int>>,
}

impl ConeConstraints {
    pub fn contains(&self, x: &[Int]) -> bool {
        self.equations.iter().all(|e| dot(e, x).is_zero())
            && self.inequalities.iter().all(|f| !dot(f, x).is_negative())
    }
}

#[derive(Clone, Debug)]
pub struct RationalCone {
    dim: usize,
    gens: Vec<Vec<Int>>,
}

impl RationalCone {
    /// Zero generators are dropped; duplicates are kept out.
    pub fn new(gens: Vec<Vec<Int>>) -> Result<Self> {
        let Some(first) = gens.first() else {
            return Err(Error::EmptyInput);
        };
        let dim = first.len();
        let mut out: Vec<Vec<Int>> = Vec::new();
        for g in gens {
            if g.len() != dim {
                return Err(Error::LengthMismatch { expected: dim, found: g.len() });
            }
            if g.iter().any(|x| !x.is_zero()) && !out.contains(&g) {
                out.push(g);
            }
        }
        if out.is_empty() {
            return precondition("cone has no non-zero generator");
        }
        Ok(RationalCone { dim, gens: out })
    }

    pub fn from_u32(gens: &[Vec<u32>]) -> Result<Self> {
        Self::new(gens.iter().map(|g| g.iter().map(|&x| Int::from(x)).collect()).collect())
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<Int>] {
        &self.gens
    }

    pub fn rank(&self) -> usize {
        independent_subset(&self.gens).len()
    }

    /// Pointed iff some linear form is ≥ 1 on every generator.
    pub fn is_pointed(&self) -> Result<bool> {
        let n = self.dim;
        let a: Vec<Vec<Rat>> = self
            .gens
            .iter()
            .map(|g| {
                let mut row: Vec<Rat> = g.iter().map(|x| Rat::from_integer(-x.clone())).collect();
                row.extend(g.iter().map(|x| Rat::from_integer(x.clone())));
                row
            })
            .collect();
        let b = vec![-Rat::one(); self.gens.len()];
        match maximize(&a, &b, &vec![Rat::zero(); 2 * n]) {
            Ok(_) => Ok(true),
            Err(Error::Infeasible) => Ok(false),
            Err(e) => Err(e),
        }
    }

    fn coordinates(&self, lattice: Lattice) -> Coordinates {
        match lattice {
            Lattice::Saturated => Coordinates::new(saturation_basis(&self.gens)),
            Lattice::Generated => Coordinates::new(lattice_basis(&self.gens)),
        }
    }

    fn local_gens(&self, c: &Coordinates) -> Vec<Vec<Int>> {
        self.gens.iter().map(|g| c.coords(g).expect("generator lies in its lattice")).collect()
    }

    /// Facet normals in lattice coordinates (primitive, inward).
    fn local_facets(&self, c: &Coordinates) -> Result<Vec<Vec<Int>>> {
        let local = self.local_gens(c);
        if !self.is_pointed()? {
            return precondition("cone is not pointed");
        }
        if c.rank() == 1 {
            // a ray; the basis vector may point the other way
            let sign = if local[0][0].is_negative() { -Int::one() } else { Int::one() };
            return Ok(vec![vec![sign]]);
        }
        extreme_rays(&local, c.rank())
    }

    pub fn in_lattice(&self, x: &[Int], lattice: Lattice) -> bool {
        x.len() == self.dim && self.coordinates(lattice).coords(x).is_some()
    }

    /// Equations of the span plus primitive inward facet normals.
    pub fn constraints(&self) -> Result<ConeConstraints> {
        let c = self.coordinates(Lattice::Saturated);
        let equations = integer_kernel(&self.gens, self.dim);
        let mut equations: Vec<Vec<Int>> = equations;
        for e in equations.iter_mut() {
            make_primitive(e);
        }
        let inequalities = self
            .local_facets(&c)?
            .iter()
            .map(|f| primitive_from_rats(&c.pullback(f)))
            .collect();
        Ok(ConeConstraints { equations, inequalities })
    }

    /// Placing triangulation: simplices as sorted index lists into `generators()`.
    pub fn triangulation(&self) -> Vec<Vec<usize>> {
        let c = self.coordinates(Lattice::Saturated);
        triangulate(&self.local_gens(&c))
    }

    /// Σ |det| over the triangulation, in coordinates of the given lattice.
    pub fn normalized_volume(&self, lattice: Lattice) -> Int {
        let c = self.coordinates(lattice);
        let local = self.local_gens(&c);
        triangulate(&local)
            .iter()
            .map(|s| {
                let m: Vec<Vec<Int>> = s.iter().map(|&i| local[i].clone()).collect();
                determinant(&m).abs()
            })
            .sum()
    }

    /// The minimal Hilbert basis of the cone in the chosen lattice, sorted.
    pub fn hilbert_basis(&self, lattice: Lattice, budget: &Budget) -> Result<Vec<Vec<Int>>> {
        let c = self.coordinates(lattice);
        let facets = self.local_facets(&c)?;
        let local: Vec<Vec<Int>> = self
            .local_gens(&c)
            .into_iter()
            .map(|mut g| {
                make_primitive(&mut g);
                g
            })
            .collect();
        let mut candidates: BTreeSet<Vec<Int>> = local.iter().cloned().collect();
        for simplex in triangulate(&local) {
            let g: Vec<Vec<Int>> = simplex.iter().map(|&i| local[i].clone()).collect();
            for p in parallelepiped_points(&g, budget)? {
                candidates.insert(p);
            }
        }
        let basis = reduce(candidates, &facets)?;
        let mut out: Vec<Vec<Int>> = basis.iter().map(|x| c.lift(x)).collect();
        out.sort();
        Ok(out)
    }
}

/// Placing triangulation of a full-dimensional cone given by `gens` in ℤʳ.
fn triangulate(gens: &[Vec<Int>]) -> Vec<Vec<usize>> {
    let r = gens[0].len();
    let start = independent_subset(gens);
    debug_assert_eq!(start.len(), r);
    if r == 1 {
        return vec![start];
    }
    let mut simplices = vec![start.clone()];
    let mut boundary: BTreeMap<Vec<usize>, Vec<Int>> = BTreeMap::new();
    for &omit in &start {
        let face: Vec<usize> = start.iter().copied().filter(|&i| i != omit).collect();
        boundary.insert(face.clone(), inward_normal(gens, &face, omit));
    }
    let in_start: BTreeSet<usize> = start.iter().copied().collect();
    for g in 0..gens.len() {
        if in_start.contains(&g) {
            continue;
        }
        let visible: Vec<Vec<usize>> = boundary
            .iter()
            .filter(|(_, n)| dot(n, &gens[g]).is_negative())
            .map(|(f, _)| f.clone())
            .collect();
        if visible.is_empty() {
            continue;
        }
        let mut new_faces: BTreeMap<Vec<usize>, Vec<Int>> = BTreeMap::new();
        for face in &visible {
            boundary.remove(face);
            let mut simplex = face.clone();
            simplex.push(g);
            simplex.sort_unstable();
            for &omit in face {
                let mut nf: Vec<usize> = face.iter().copied().filter(|&i| i != omit).collect();
                nf.push(g);
                nf.sort_unstable();
                if new_faces.remove(&nf).is_none() {
                    let n = inward_normal(gens, &nf, omit);
                    new_faces.insert(nf, n);
                }
            }
            simplices.push(simplex);
        }
        boundary.extend(new_faces);
    }
    simplices
}

fn inward_normal(gens: &[Vec<Int>], face: &[usize], opposite: usize) -> Vec<Int> {
    let rows: Vec<Vec<Int>> = face.iter().map(|&i| gens[i].clone()).collect();
    let mut n = hyperplane_normal(&rows, gens[0].len()).expect("face spans a hyperplane");
    if dot(&n, &gens[opposite]).is_negative() {
        for x in n.iter_mut() {
            *x = -x.clone();
        }
    }
    n
}

/// Non-zero lattice points Σ λᵢ gᵢ with 0 ≤ λᵢ < 1.
pub fn parallelepiped_points(g: &[Vec<Int>], budget: &Budget) -> Result<Vec<Vec<Int>>> {
    let r = g.len();
    let cols = transpose(g); // columns are the generators
    let (e, _, rank) = column_echelon(&cols, r);
    debug_assert_eq!(rank, r);
    let (adj, d) = integer_inverse(&cols).expect("simplex is full-dimensional");
    let count = to_i128(&d).ok_or(Error::Overflow("parallelepiped size"))?;
    budget.charge_points(count as u64)?;
    let bounds: Vec<Int> = (0..r).map(|i| e[i][i].clone()).collect();
    let mut out = Vec::new();
    let mut y = vec![Int::zero(); r];
    loop {
        if y.iter().any(|v| !v.is_zero()) {
            let lam: Vec<Int> = adj.iter().map(|row| dot(row, &y).mod_floor(&d)).collect();
            let p: Vec<Int> = (0..r)
                .map(|i| {
                    let s: Int = (0..r).map(|j| &cols[i][j] * &lam[j]).sum();
                    s / &d
                })
                .collect();
            out.push(p);
        }
        let mut k = 0;
        loop {
            if k == r {
                return Ok(out);
            }
            y[k] += 1;
            if y[k] < bounds[k] {
                break;
            }
            y[k] = Int::zero();
            k += 1;
        }
    }
}

fn to_i128_vec(v: &[Int]) -> Result<Vec<i128>> {
    v.iter().map(|x| to_i128(x).ok_or(Error::Overflow("Hilbert basis reduction"))).collect()
}

/// Keeps the candidates not of the form h + c with h an accepted element and
/// c a non-zero cone point, scanning by increasing degree.
fn reduce(candidates: BTreeSet<Vec<Int>>, facets: &[Vec<Int>]) -> Result<Vec<Vec<Int>>> {
    let f: Vec<Vec<i128>> = facets.iter().map(|x| to_i128_vec(x)).collect::<Result<_>>()?;
    let mut items: Vec<(i128, Vec<i128>, Vec<i128>, Vec<Int>)> = Vec::with_capacity(candidates.len());
    for x in candidates {
        let xi = to_i128_vec(&x)?;
        let vals: Vec<i128> = f.iter().map(|n| n.iter().zip(&xi).map(|(a, b)| a * b).sum()).collect();
        let deg = vals.iter().sum();
        items.push((deg, vals, xi, x));
    }
    items.sort();
    let mut accepted: Vec<(i128, Vec<i128>)> = Vec::new();
    let mut out = Vec::new();
    for (deg, vals, _, x) in items {
        let reducible = accepted
            .iter()
            .any(|(hd, hv)| *hd < deg && hv.iter().zip(&vals).all(|(h, v)| h <= v));
        if !reducible {
            accepted.push((deg, vals));
            out.push(x);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn im(rows: &[&[i64]]) -> Vec<Vec<Int>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    fn hb(rows: &[&[i64]], lattice: Lattice) -> Vec<Vec<Int>> {
        RationalCone::new(im(rows)).unwrap().hilbert_basis(lattice, &Budget::default()).unwrap()
    }

    #[test]
    fn unimodular_and_classic_examples() {
        assert_eq!(hb(&[&[1, 0], &[0, 1]], Lattice::Saturated), im(&[&[0, 1], &[1, 0]]));
        assert_eq!(hb(&[&[1, 0], &[1, 2]], Lattice::Saturated), im(&[&[1, 0], &[1, 1], &[1, 2]]));
        // in the generated lattice nothing is missing
        assert_eq!(hb(&[&[1, 0], &[1, 2]], Lattice::Generated), im(&[&[1, 0], &[1, 2]]));
    }

    #[test]
    fn cone_over_squares_is_normal() {
        let g = im(&[&[1, 1, 0, 0, 1], &[0, 1, 1, 0, 1], &[0, 0, 1, 1, 1], &[1, 0, 0, 1, 1]]);
        let cone = RationalCone::new(g.clone()).unwrap();
        let mut want = g;
        want.sort();
        assert_eq!(cone.hilbert_basis(Lattice::Saturated, &Budget::default()).unwrap(), want);
    }

    #[test]
    fn triangle_edge_cone_gains_the_odd_cycle() {
        // lifted triangle edges (v_i, 1) with unit vectors: the Rees cone of I(C3) is normal
        let g = im(&[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[1, 1, 0, 1],
            &[0, 1, 1, 1],
            &[1, 0, 1, 1],
        ]);
        let cone = RationalCone::new(g.clone()).unwrap();
        assert_eq!(cone.hilbert_basis(Lattice::Saturated, &Budget::default()).unwrap().len(), 6);
        // while the edge vectors alone miss (1,1,1)·? in the saturated lattice of their span
        let e = im(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let basis = RationalCone::new(e).unwrap().hilbert_basis(Lattice::Saturated, &Budget::default()).unwrap();
        assert!(basis.contains(&im(&[&[1, 1, 1]])[0]));
        assert_eq!(basis.len(), 4);
    }

    #[test]
    fn constraints_of_lower_dimensional_cone() {
        let cone = RationalCone::new(im(&[&[1, 0, 1], &[0, 1, 1]])).unwrap();
        let c = cone.constraints().unwrap();
        assert_eq!(c.equations.len(), 1);
        assert_eq!(c.inequalities.len(), 2);
        assert!(c.contains(&im(&[&[1, 1, 2]])[0]));
        assert!(!c.contains(&im(&[&[1, 1, 1]])[0]));
        assert!(!c.contains(&im(&[&[-1, 2, 1]])[0]));
    }

    #[test]
    fn triangulation_volume() {
        // unit square cone has normalized volume 2
        let cone = RationalCone::new(im(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]])).unwrap();
        assert_eq!(cone.normalized_volume(Lattice::Saturated), int(2));
        assert_eq!(cone.triangulation().len(), 2);
    }

    #[test]
    fn non_pointed_is_rejected() {
        let cone = RationalCone::new(im(&[&[1, 0], &[-1, 0], &[0, 1]])).unwrap();
        assert!(!cone.is_pointed().unwrap());
        assert!(cone.hilbert_basis(Lattice::Saturated, &Budget::default()).is_err());
    }

    #[test]
    fn single_ray_constraints() {
        for g in [[1, 2, 0, 1], [0, 0, 3, 1], [-1, 0, 0, 0]] {
            let cone = RationalCone::new(im(&[&g])).unwrap();
            let c = cone.constraints().unwrap();
            let x: Vec<Int> = g.iter().map(|&v| int(v)).collect();
            let minus: Vec<Int> = x.iter().map(|v| -v).collect();
            assert!(c.contains(&x) && !c.contains(&minus), "{g:?}");
        }
    }
}
