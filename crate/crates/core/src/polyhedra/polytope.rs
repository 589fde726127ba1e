//! Polyhedra in H-representation, lattice polytopes, lattice-point counting
//! and Ehrhart data.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{binomial, factorial, rat_int, to_i128, Int, Rat};
use crate::budget::Budget;
use crate::error::{inconsistent, precondition, Error, Result};
use crate::polyhedra::cone::{ConeConstraints, Lattice, RationalCone};
use crate::polyhedra::dd::extreme_rays;
use crate::polyhedra::linalg::{rank, solve};

/// `normal·x ≥ offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inequality {
    pub normal: Vec<Rat>,
    pub offset: Rat,
}

impl Inequality {
    pub fn new(normal: Vec<Rat>, offset: Rat) -> Self {
        Inequality { normal, offset }
    }

    pub fn holds(&self, x: &[Rat]) -> bool {
        crate::arith::dot_rat(&self.normal, x) >= self.offset
    }

    /// Integer row (a, −b) with a·x − b·λ ≥ 0 describing the same halfspace.
    fn homogeneous_row(&self) -> Vec<Int> {
        let mut v = self.normal.clone();
        v.push(-self.offset.clone());
        crate::arith::primitive_from_rats(&v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexData {
    pub vertices: Vec<Vec<Rat>>,
    /// Primitive generators of the recession cone's extreme rays.
    pub rays: Vec<Vec<Int>>,
}

impl VertexData {
    pub fn is_integral(&self) -> bool {
        self.vertices.iter().all(|v| v.iter().all(|x| x.is_integer()))
    }

    pub fn integral_vertices(&self) -> impl Iterator<Item = &Vec<Rat>> {
        self.vertices.iter().filter(|v| v.iter().all(|x| x.is_integer()))
    }
}

#[derive(Clone, Debug)]
pub struct RationalPolyhedron {
    dim: usize,
    inequalities: Vec<Inequality>,
}

impl RationalPolyhedron {
    pub fn new(dim: usize, inequalities: Vec<Inequality>) -> Result<Self> {
        for q in &inequalities {
            if q.normal.len() != dim {
                return Err(Error::LengthMismatch { expected: dim, found: q.normal.len() });
            }
        }
        Ok(RationalPolyhedron { dim, inequalities })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn inequalities(&self) -> &[Inequality] {
        &self.inequalities
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.inequalities.iter().all(|q| q.holds(x))
    }

    /// Vertices and extreme rays by double description on the homogenization.
    /// Requires the polyhedron to contain no line.
    pub fn vertex_data(&self) -> Result<VertexData> {
        let n = self.dim;
        let mut rows: Vec<Vec<Int>> = self.inequalities.iter().map(|q| q.homogeneous_row()).collect();
        let mut lam = vec![Int::zero(); n + 1];
        lam[n] = Int::one();
        rows.push(lam);
        let rays = extreme_rays(&rows, n + 1)?;
        let mut vertices = Vec::new();
        let mut rec = Vec::new();
        for r in rays {
            if r[n].is_zero() {
                rec.push(r[..n].to_vec());
            } else {
                let d = rat_int(&r[n]);
                vertices.push(r[..n].iter().map(|x| rat_int(x) / &d).collect::<Vec<Rat>>());
            }
        }
        vertices.sort();
        rec.sort();
        Ok(VertexData { vertices, rays: rec })
    }

    /// Lattice points of the dilation nP (bounded P only).
    pub fn lattice_points(&self, n: u64, budget: &Budget) -> Result<Vec<Vec<Int>>> {
        let mut out = Vec::new();
        self.scan(n, budget, Some(&mut out))?;
        Ok(out)
    }

    pub fn count_lattice_points(&self, n: u64, budget: &Budget) -> Result<u64> {
        self.scan(n, budget, None)
    }

    fn scan(&self, n: u64, budget: &Budget, out: Option<&mut Vec<Vec<Int>>>) -> Result<u64> {
        let vd = self.vertex_data()?;
        if !vd.rays.is_empty() {
            return precondition("polyhedron is unbounded");
        }
        if vd.vertices.is_empty() {
            return Ok(0);
        }
        let nr = Rat::from_integer(Int::from(n));
        let (lo, hi) = bounding_box(vd.vertices.iter().map(|v| v.iter().map(|x| x * &nr).collect()), self.dim);
        let rows: Vec<(Vec<Int>, Int)> = self
            .inequalities
            .iter()
            .map(|q| {
                let h = q.homogeneous_row();
                (h[..self.dim].to_vec(), -&h[self.dim] * Int::from(n))
            })
            .collect();
        count_in_box(&rows, &lo, &hi, budget, out)
    }
}

fn bounding_box(points: impl Iterator<Item = Vec<Rat>>, dim: usize) -> (Vec<Int>, Vec<Int>) {
    let mut lo: Vec<Option<Int>> = vec![None; dim];
    let mut hi: Vec<Option<Int>> = vec![None; dim];
    for p in points {
        for i in 0..dim {
            let f = p[i].floor().to_integer();
            let c = p[i].ceil().to_integer();
            if lo[i].as_ref().map_or(true, |l| f < *l) {
                lo[i] = Some(f);
            }
            if hi[i].as_ref().map_or(true, |h| c > *h) {
                hi[i] = Some(c);
            }
        }
    }
    (lo.into_iter().map(|x| x.unwrap()).collect(), hi.into_iter().map(|x| x.unwrap()).collect())
}

struct Scan<'a> {
    a: Vec<Vec<i128>>,
    b: Vec<i128>,
    lo: Vec<i128>,
    hi: Vec<i128>,
    /// suffix[i][c] = max of Σ_{j ≥ i} a_cj x_j over the box.
    suffix: Vec<Vec<i128>>,
    budget: &'a Budget,
    count: u64,
    out: Option<&'a mut Vec<Vec<Int>>>,
}

fn overflow() -> Error {
    Error::Overflow("lattice point enumeration")
}

fn small(v: &Int) -> Result<i128> {
    to_i128(v).filter(|x| x.abs() < 1 << 100).ok_or_else(overflow)
}

/// Counts x ∈ ℤⁿ in the box [lo, hi] with a·x ≥ b for every row (a, b).
fn count_in_box(
    rows: &[(Vec<Int>, Int)],
    lo: &[Int],
    hi: &[Int],
    budget: &Budget,
    out: Option<&mut Vec<Vec<Int>>>,
) -> Result<u64> {
    let n = lo.len();
    let a: Vec<Vec<i128>> = rows.iter().map(|(r, _)| r.iter().map(small).collect()).collect::<Result<_>>()?;
    let b: Vec<i128> = rows.iter().map(|(_, b)| small(b)).collect::<Result<_>>()?;
    let lo: Vec<i128> = lo.iter().map(small).collect::<Result<_>>()?;
    let hi: Vec<i128> = hi.iter().map(small).collect::<Result<_>>()?;
    let mut suffix = vec![vec![0i128; a.len()]; n + 1];
    for i in (0..n).rev() {
        for c in 0..a.len() {
            let m = (a[c][i] * lo[i]).max(a[c][i] * hi[i]);
            suffix[i][c] = suffix[i + 1][c].checked_add(m).ok_or_else(overflow)?;
        }
    }
    let mut s = Scan { a, b, lo, hi, suffix, budget, count: 0, out };
    let mut x = vec![0i128; n];
    let partial = vec![0i128; s.a.len()];
    s.descend(0, &mut x, &partial)?;
    Ok(s.count)
}

impl Scan<'_> {
    fn descend(&mut self, i: usize, x: &mut Vec<i128>, partial: &[i128]) -> Result<()> {
        let n = x.len();
        if i == n {
            self.count += 1;
            if let Some(out) = self.out.as_mut() {
                out.push(x.iter().map(|&v| Int::from(v)).collect());
            }
            return Ok(());
        }
        let (mut lo, mut hi) = (self.lo[i], self.hi[i]);
        for c in 0..self.a.len() {
            let rhs = self.b[c] - partial[c] - self.suffix[i + 1][c];
            let coef = self.a[c][i];
            match coef.signum() {
                1 => lo = lo.max(ceil_div(rhs, coef)),
                -1 => hi = hi.min(Integer::div_floor(&rhs, &coef)),
                _ => {
                    if rhs > 0 {
                        return Ok(());
                    }
                }
            }
        }
        if lo > hi {
            return Ok(());
        }
        self.budget.charge_points((hi - lo + 1) as u64)?;
        let mut next = partial.to_vec();
        for v in lo..=hi {
            x[i] = v;
            for c in 0..self.a.len() {
                next[c] = partial[c] + self.a[c][i] * v;
            }
            self.descend(i + 1, x, &next)?;
        }
        Ok(())
    }
}

fn ceil_div(a: i128, d: i128) -> i128 {
    -Integer::div_floor(&-a, &d)
}

/// Convex hull of finitely many lattice points.
#[derive(Clone, Debug)]
pub struct LatticePolytope {
    points: Vec<Vec<Int>>,
    /// Constraints of the cone over {(p, 1)}.
    cone: ConeConstraints,
    dim: usize,
}

impl LatticePolytope {
    pub fn new(points: Vec<Vec<Int>>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyInput);
        }
        let lifted: Vec<Vec<Int>> = points
            .iter()
            .map(|p| {
                let mut v = p.clone();
                v.push(Int::one());
                v
            })
            .collect();
        let cone = RationalCone::new(lifted.clone())?;
        let constraints = cone.constraints()?;
        let dim = rank(&lifted) - 1;
        let mut pts = points;
        pts.sort();
        pts.dedup();
        Ok(LatticePolytope { points: pts, cone: constraints, dim })
    }

    pub fn from_u32(points: &[Vec<u32>]) -> Result<Self> {
        Self::new(points.iter().map(|p| p.iter().map(|&x| Int::from(x)).collect()).collect())
    }

    pub fn points(&self) -> &[Vec<Int>] {
        &self.points
    }

    pub fn ambient_dim(&self) -> usize {
        self.points[0].len()
    }

    /// Dimension of the affine hull.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn contains(&self, x: &[Int]) -> bool {
        let mut v = x.to_vec();
        v.push(Int::one());
        self.cone.contains(&v)
    }

    /// Facets as inequalities `normal·x ≥ offset`; equations of the affine hull
    /// appear as pairs of opposite inequalities.
    pub fn h_representation(&self) -> RationalPolyhedron {
        let n = self.ambient_dim();
        let mut out = Vec::new();
        let mut push = |row: &Vec<Int>| {
            out.push(Inequality::new(row[..n].iter().map(rat_int).collect(), -rat_int(&row[n])));
        };
        for e in &self.cone.equations {
            push(e);
            push(&e.iter().map(|x| -x.clone()).collect());
        }
        for f in &self.cone.inequalities {
            push(f);
        }
        RationalPolyhedron { dim: n, inequalities: out }
    }

    /// |nP ∩ ℤⁿ|.
    pub fn count(&self, n: u64, budget: &Budget) -> Result<u64> {
        self.scan(n, budget, None)
    }

    pub fn lattice_points(&self, n: u64, budget: &Budget) -> Result<Vec<Vec<Int>>> {
        let mut out = Vec::new();
        self.scan(n, budget, Some(&mut out))?;
        Ok(out)
    }

    fn scan(&self, n: u64, budget: &Budget, out: Option<&mut Vec<Vec<Int>>>) -> Result<u64> {
        self.scan_with(n, false, budget, out)
    }

    /// Lattice points of the relative interior of nP.
    pub fn count_interior(&self, n: u64, budget: &Budget) -> Result<u64> {
        self.scan_with(n, true, budget, None)
    }

    fn scan_with(&self, n: u64, strict: bool, budget: &Budget, out: Option<&mut Vec<Vec<Int>>>) -> Result<u64> {
        let d = self.ambient_dim();
        let nn = Int::from(n);
        let lo: Vec<Int> = (0..d).map(|i| self.points.iter().map(|p| &p[i] * &nn).min().unwrap()).collect();
        let hi: Vec<Int> = (0..d).map(|i| self.points.iter().map(|p| &p[i] * &nn).max().unwrap()).collect();
        let mut rows: Vec<(Vec<Int>, Int)> = Vec::new();
        for e in &self.cone.equations {
            rows.push((e[..d].to_vec(), -&e[d] * &nn));
            rows.push((e[..d].iter().map(|x| -x.clone()).collect(), &e[d] * &nn));
        }
        // integral rows: a·x > b is a·x ≥ b + 1
        let shift = if strict { Int::one() } else { Int::zero() };
        for f in &self.cone.inequalities {
            rows.push((f[..d].to_vec(), -&f[d] * &nn + &shift));
        }
        count_in_box(&rows, &lo, &hi, budget, out)
    }

    /// d!·vol relative to the affine lattice of P, by triangulation.
    pub fn normalized_volume(&self) -> Int {
        if self.dim == 0 {
            return Int::one();
        }
        let lifted: Vec<Vec<Int>> = self
            .points
            .iter()
            .map(|p| {
                let mut v = p.clone();
                v.push(Int::one());
                v
            })
            .collect();
        RationalCone::new(lifted).expect("non-empty").normalized_volume(Lattice::Saturated)
    }

    /// Ehrhart polynomial from d + 2 samples: closed counts of the smaller
    /// dilations and, by reciprocity E(−n) = (−1)^d·|int(nP) ∩ ℤⁿ|, interior
    /// counts for the rest. This halves the largest dilation scanned.
    pub fn ehrhart(&self, budget: &Budget) -> Result<EhrhartData> {
        let d = self.dim;
        let interior = (d as u64 + 1) / 2;
        let mut samples = Vec::with_capacity(d + 2);
        for n in 0..=(d as u64 + 1 - interior) {
            samples.push((n as i64, Int::from(self.count(n, budget)?)));
        }
        for n in 1..=interior {
            let c = Int::from(self.count_interior(n, budget)?);
            samples.push((-(n as i64), if d % 2 == 0 { c } else { -c }));
        }
        let data = EhrhartData::from_samples(d, &samples)?;
        if data.normalized_volume() != self.normalized_volume() {
            return inconsistent("Ehrhart volume disagrees with triangulation volume");
        }
        Ok(data)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartData {
    pub dim: usize,
    /// E(0), …, E(dim + 1).
    pub counts: Vec<u64>,
    /// Coefficients of E in increasing degree.
    pub coefficients: Vec<Rat>,
    pub h_vector: Vec<Int>,
}

impl EhrhartData {
    /// Interpolates through the first dim+1 counts and checks the last one.
    pub fn from_counts(dim: usize, counts: Vec<u64>) -> Result<Self> {
        if counts.len() != dim + 2 {
            return precondition("need dim + 2 counts");
        }
        let a: Vec<Vec<Rat>> = (0..=dim)
            .map(|n| (0..=dim).map(|k| Rat::from_integer(Int::from(n).pow(k as u32))).collect())
            .collect();
        let b: Vec<Rat> = counts[..=dim].iter().map(|&c| Rat::from_integer(Int::from(c))).collect();
        let coefficients = solve(&a, &b).expect("Vandermonde systems are regular");
        let mut data = EhrhartData { dim, counts, coefficients, h_vector: Vec::new() };
        if data.evaluate(dim as u64 + 1) != Rat::from_integer(Int::from(data.counts[dim + 1])) {
            return inconsistent("lattice point counts are not polynomial of the expected degree");
        }
        let e = |i: usize| Int::from(data.counts[i]);
        let mut h = Vec::with_capacity(dim + 1);
        for i in 0..=dim {
            let mut v = Int::zero();
            for j in 0..=i {
                let t = binomial(dim as u64 + 1, j as u64) * e(i - j);
                if j.is_even() {
                    v += t;
                } else {
                    v -= t;
                }
            }
            h.push(v);
        }
        if h.iter().any(|x| x.is_negative()) {
            return inconsistent("negative h-vector entry");
        }
        data.h_vector = h;
        let lead = data.coefficients[dim].clone() * rat_int(&factorial(dim as u64));
        if lead != rat_int(&data.normalized_volume()) {
            return inconsistent("h-vector sum differs from d!·leading coefficient");
        }
        Ok(data)
    }

    /// Interpolates through the first dim+1 samples (n, E(n)), checks the
    /// others, and continues from the values at n = 0, …, dim + 1.
    pub fn from_samples(dim: usize, samples: &[(i64, Int)]) -> Result<Self> {
        if samples.len() < dim + 2 {
            return precondition("need dim + 2 samples");
        }
        let a: Vec<Vec<Rat>> = samples[..=dim]
            .iter()
            .map(|(n, _)| (0..=dim).map(|k| Rat::from_integer(Int::from(*n).pow(k as u32))).collect())
            .collect();
        let b: Vec<Rat> = samples[..=dim].iter().map(|(_, v)| rat_int(v)).collect();
        let Some(coefficients) = solve(&a, &b) else {
            return precondition("sample points must be distinct");
        };
        let at = |n: i64| {
            let x = Rat::from_integer(Int::from(n));
            coefficients.iter().rev().fold(Rat::zero(), |acc, c| acc * &x + c)
        };
        if samples[dim + 1..].iter().any(|(n, v)| at(*n) != rat_int(v)) {
            return inconsistent("lattice point counts are not polynomial of the expected degree");
        }
        let counts = (0..=dim as i64 + 1)
            .map(|n| {
                let v = at(n);
                if !v.is_integer() {
                    return inconsistent("non-integral Ehrhart value");
                }
                v.to_integer().to_u64().ok_or(Error::Overflow("Ehrhart value"))
            })
            .collect::<Result<Vec<u64>>>()?;
        Self::from_counts(dim, counts)
    }

    pub fn evaluate(&self, n: u64) -> Rat {
        let x = Rat::from_integer(Int::from(n));
        self.coefficients.iter().rev().fold(Rat::zero(), |acc, c| acc * &x + c)
    }

    pub fn leading_coefficient(&self) -> &Rat {
        &self.coefficients[self.dim]
    }

    pub fn normalized_volume(&self) -> Int {
        self.h_vector.iter().sum()
    }

    /// Degree of the h-polynomial.
    pub fn h_degree(&self) -> usize {
        self.h_vector.iter().rposition(|x| !x.is_zero()).unwrap_or(0)
    }
}

/// Multiplies a rational point by the lcm of its denominators.
pub fn clear_denominators(v: &[Rat]) -> (Vec<Int>, Int) {
    let den = v.iter().fold(Int::one(), |acc, x| acc.lcm(x.denom()));
    let out = v.iter().map(|x| (x * rat_int(&den)).to_integer()).collect();
    (out, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn pts(rows: &[&[i64]]) -> Vec<Vec<Int>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn unit_square_dilation() {
        let p = LatticePolytope::new(pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!(p.count(2, &Budget::default()).unwrap(), 9);
    }

    #[test]
    fn triangle_under_line() {
        // Pick: area 15, 12 boundary points, so 10 interior and 22 in total
        let p = LatticePolytope::new(pts(&[&[0, 0], &[6, 0], &[0, 5]])).unwrap();
        let by_rows: u64 = (0..=6u64).map(|x| (30 - 5 * x) / 6 + 1).sum();
        assert_eq!(by_rows, 22);
        assert_eq!(p.count(1, &Budget::default()).unwrap(), 22);
        assert_eq!(p.normalized_volume(), int(30));
    }

    #[test]
    fn segment_and_simplex_ehrhart() {
        let seg = LatticePolytope::new(pts(&[&[0], &[1]])).unwrap().ehrhart(&Budget::default()).unwrap();
        assert_eq!(seg.coefficients, vec![rat(1, 1), rat(1, 1)]);
        assert_eq!(seg.h_vector, vec![int(1), int(0)]);
        let tri = LatticePolytope::new(pts(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap().ehrhart(&Budget::default()).unwrap();
        assert_eq!(tri.coefficients, vec![rat(1, 1), rat(3, 2), rat(1, 2)]);
        assert_eq!(tri.h_degree(), 0);
    }

    #[test]
    fn lower_dimensional_polytope_uses_relative_volume() {
        // segment from (0,0,1) to (2,2,1): relative normalized volume 2
        let p = LatticePolytope::new(pts(&[&[0, 0, 1], &[2, 2, 1]])).unwrap();
        assert_eq!(p.dim(), 1);
        let e = p.ehrhart(&Budget::default()).unwrap();
        assert_eq!(e.counts, vec![1, 3, 5]);
        assert_eq!(e.normalized_volume(), int(2));
    }

    #[test]
    fn edge_polytope_of_square() {
        let p = LatticePolytope::new(pts(&[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1], &[1, 0, 0, 1]])).unwrap();
        let e = p.ehrhart(&Budget::default()).unwrap();
        assert_eq!(p.dim(), 2);
        assert_eq!(e.h_vector, vec![int(1), int(1), int(0)]);
    }

    #[test]
    fn reciprocity_matches_direct_counts() {
        // hypersimplex Δ(5, 2), dimension 4
        let mut v = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                let mut p = vec![0; 5];
                p[i] = 1;
                p[j] = 1;
                v.push(p);
            }
        }
        let p = LatticePolytope::new(v.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap();
        let b = Budget::default();
        let e = p.ehrhart(&b).unwrap();
        let direct: Vec<u64> = (0..=5).map(|n| p.count(n, &b).unwrap()).collect();
        assert_eq!(e.counts, direct);
        assert_eq!(e.h_vector, vec![int(1), int(5), int(5), int(0), int(0)]);
        // the square has one interior point in 2P and none in P
        let sq = LatticePolytope::new(pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!((sq.count_interior(1, &b).unwrap(), sq.count_interior(2, &b).unwrap()), (0, 1));
    }

    #[test]
    fn covering_triangle_vertices() {
        let one = rat(1, 1);
        let z = rat(0, 1);
        let mut ineq = Vec::new();
        for i in 0..3 {
            let mut e = vec![z.clone(); 3];
            e[i] = one.clone();
            ineq.push(Inequality::new(e, z.clone()));
        }
        for (i, j) in [(0, 1), (1, 2), (0, 2)] {
            let mut e = vec![z.clone(); 3];
            e[i] = one.clone();
            e[j] = one.clone();
            ineq.push(Inequality::new(e, one.clone()));
        }
        let q = RationalPolyhedron::new(3, ineq).unwrap();
        let vd = q.vertex_data().unwrap();
        assert_eq!(vd.rays.len(), 3);
        assert_eq!(vd.vertices.len(), 4);
        assert!(vd.vertices.contains(&vec![rat(1, 2); 3]));
        assert!(!vd.is_integral());
    }

    #[test]
    fn bounded_rational_polyhedron_counts() {
        // 0 ≤ x ≤ 3/2, 0 ≤ y ≤ 1
        let q = RationalPolyhedron::new(
            2,
            vec![
                Inequality::new(vec![rat(1, 1), rat(0, 1)], rat(0, 1)),
                Inequality::new(vec![rat(-1, 1), rat(0, 1)], rat(-3, 2)),
                Inequality::new(vec![rat(0, 1), rat(1, 1)], rat(0, 1)),
                Inequality::new(vec![rat(0, 1), rat(-1, 1)], rat(-1, 1)),
            ],
        )
        .unwrap();
        assert_eq!(q.count_lattice_points(1, &Budget::default()).unwrap(), 4);
        assert_eq!(q.count_lattice_points(2, &Budget::default()).unwrap(), 12);
    }
}
