//! Multiplicities, normalization Hilbert functions, Veronese invariants,
//! regularity of monomial subrings, m-fullness and monomial Cremona maps.

use num_integer::{binomial, Integer};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::{rat, Int, Rat};
use crate::budget::Budget;
use crate::closure::{incidence_rank, is_normal, Method, NewtonPolyhedron};
use crate::error::{inconsistent, precondition, Error, Result};
use crate::monomial::{ExponentVector, MonomialIdeal};
use crate::polyhedra::linalg::determinant;
use crate::polyhedra::polytope::clear_denominators;
use crate::polyhedra::{Inequality, Lattice, LatticePolytope, RationalCone, RationalPolyhedron};

/// Δ = conv(0, a₁e₁, …, a_se_s) split by the Newton polyhedron: P₀ = Δ ∩ NP(I)
/// and P = Δ \ P₀. Volumes are Euclidean.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityRegion {
    pub pure_powers: Vec<u32>,
    #[serde(serialize_with = "crate::arith::serialize_rat_rows")]
    pub p0_vertices: Vec<Vec<Rat>>,
    #[serde(serialize_with = "crate::arith::serialize_rat")]
    pub delta_volume: Rat,
    #[serde(serialize_with = "crate::arith::serialize_rat")]
    pub p0_volume: Rat,
    #[serde(serialize_with = "crate::arith::serialize_rat")]
    pub region_volume: Rat,
}

fn factorial(n: usize) -> Int {
    (1..=n).fold(Int::one(), |acc, k| acc * Int::from(k))
}

fn pure_powers(i: &MonomialIdeal) -> Result<Vec<u32>> {
    i.pure_powers()
        .ok_or_else(|| Error::Precondition("the ideal is not zero-dimensional".into()))
}

/// P₀ = {x ∈ Δ : ⟨γ, x⟩ ≥ d for every facet (γ, d) of NP(I)}.
fn p0_polyhedron(i: &MonomialIdeal, a: &[u32]) -> Result<RationalPolyhedron> {
    let s = i.nvars();
    let mut ineq = Vec::new();
    for k in 0..s {
        let mut e = vec![Rat::zero(); s];
        e[k] = Rat::one();
        ineq.push(Inequality::new(e, Rat::zero()));
    }
    // Σ x_k / a_k ≤ 1
    ineq.push(Inequality::new(a.iter().map(|&ak| -rat(1, ak as i64)).collect(), -Rat::one()));
    for (g, d) in NewtonPolyhedron::new(i)?.facets() {
        ineq.push(Inequality::new(g.iter().map(|&x| Rat::from_integer(Int::from(x))).collect(), Rat::from_integer(Int::from(*d))));
    }
    RationalPolyhedron::new(s, ineq)
}

/// s!·vol of conv(vertices), by the placing triangulation of the cone over
/// the homogenized vertices.
fn scaled_volume(vertices: &[Vec<Rat>], s: usize) -> Result<Rat> {
    let lifted: Vec<Vec<Int>> = vertices
        .iter()
        .map(|v| {
            let mut w = v.clone();
            w.push(Rat::one());
            clear_denominators(&w).0
        })
        .collect();
    let cone = RationalCone::new(lifted)?;
    if cone.rank() < s + 1 {
        return Ok(Rat::zero());
    }
    let gens = cone.generators();
    let mut total = Rat::zero();
    for simplex in cone.triangulation() {
        let m: Vec<Vec<Int>> = simplex.iter().map(|&j| gens[j].clone()).collect();
        let heights: Int = simplex.iter().map(|&j| gens[j][s].clone()).product();
        total += Rat::new(determinant(&m).abs(), heights);
    }
    Ok(total)
}

pub fn multiplicity_region(i: &MonomialIdeal) -> Result<MultiplicityRegion> {
    let a = pure_powers(i)?;
    let s = i.nvars();
    let vd = p0_polyhedron(i, &a)?.vertex_data()?;
    if !vd.rays.is_empty() {
        return inconsistent("P₀ is unbounded");
    }
    let fact = Rat::from_integer(factorial(s));
    let delta_volume = Rat::from_integer(a.iter().map(|&x| Int::from(x)).product()) / &fact;
    let p0_volume = scaled_volume(&vd.vertices, s)? / &fact;
    let region_volume = &delta_volume - &p0_volume;
    Ok(MultiplicityRegion {
        pure_powers: a,
        p0_vertices: vd.vertices,
        delta_volume,
        p0_volume,
        region_volume,
    })
}

/// e(I) = a₁⋯a_s − s!·vol(P₀), checked against the leading coefficient of the
/// normalization Hilbert function.
pub fn multiplicity(i: &MonomialIdeal, budget: &Budget) -> Result<Int> {
    let region = multiplicity_region(i)?;
    let e = region.region_volume * Rat::from_integer(factorial(i.nvars()));
    if !e.is_integer() {
        return inconsistent(format!("s!·vol(P) = {e} is not an integer"));
    }
    let e = e.to_integer();
    let by_counts = multiplicity_by_hilbert_function(i, budget)?;
    if e != by_counts {
        return inconsistent(format!("e(I) by volume {e} ≠ {by_counts} from the Hilbert function"));
    }
    Ok(e)
}

/// s!·(leading coefficient) of n ↦ ℓ(S/closure(Iⁿ)), from the s-th finite
/// difference at 0; the (s+1)-th difference must vanish.
pub fn multiplicity_by_hilbert_function(i: &MonomialIdeal, budget: &Budget) -> Result<Int> {
    let s = i.nvars();
    let np = NewtonPolyhedron::new(i)?;
    let a = pure_powers(i)?;
    let f: Vec<Int> = (0..=s as u32 + 1)
        .map(|n| complement_count(&np, &a, n, budget).map(Int::from))
        .collect::<Result<_>>()?;
    let diff = |order: usize| -> Int {
        (0..=order)
            .map(|j| {
                let c = binomial(Int::from(order), Int::from(j)) * &f[j];
                if (order - j) % 2 == 0 { c } else { -c }
            })
            .sum()
    };
    if !diff(s + 1).is_zero() {
        return inconsistent("the normalization Hilbert function is not a polynomial of degree s");
    }
    Ok(diff(s))
}

// |ℕˢ \ nQ|; every such point lies in the box a_k < n·a_k.
fn complement_count(np: &NewtonPolyhedron, a: &[u32], n: u32, budget: &Budget) -> Result<u64> {
    if n == 0 {
        return Ok(0);
    }
    let mut x = vec![0u32; a.len()];
    let mut count = 0u64;
    walk_box(np, a, n, 0, &mut x, &mut count, budget)?;
    Ok(count)
}

fn walk_box(
    np: &NewtonPolyhedron,
    a: &[u32],
    n: u32,
    j: usize,
    x: &mut Vec<u32>,
    count: &mut u64,
    budget: &Budget,
) -> Result<()> {
    if j == a.len() {
        budget.charge_points(1)?;
        if !np.contains(x, n) {
            *count += 1;
        }
        return Ok(());
    }
    for v in 0..n * a[j] {
        x[j] = v;
        // once x is in nQ, so is everything above it along this coordinate
        let mut probe = x.clone();
        for p in probe.iter_mut().skip(j + 1) {
            *p = 0;
        }
        if j + 1 < a.len() && np.contains(&probe, n) {
            break;
        }
        walk_box(np, a, n, j + 1, x, count, budget)?;
    }
    x[j] = 0;
    Ok(())
}

/// f(n) = ℓ(S/closure(Iⁿ)) by direct count, checked against E_Δ(n) − E_{P₀}(n).
pub fn normalization_hilbert_function(i: &MonomialIdeal, n: u32, budget: &Budget) -> Result<u64> {
    let a = pure_powers(i)?;
    if n == 0 {
        return Ok(0);
    }
    let np = NewtonPolyhedron::new(i)?;
    let direct = complement_count(&np, &a, n, budget)?;
    let s = i.nvars();
    let mut delta: Vec<Vec<u32>> = vec![vec![0; s]];
    for (k, &ak) in a.iter().enumerate() {
        let mut v = vec![0; s];
        v[k] = ak;
        delta.push(v);
    }
    let e_delta = LatticePolytope::from_u32(&delta)?.count(n as u64, budget)?;
    let e_p0 = p0_polyhedron(i, &a)?.count_lattice_points(n as u64, budget)?;
    if direct + e_p0 != e_delta {
        return inconsistent(format!("direct count {direct} ≠ E_Δ − E_P₀ = {e_delta} − {e_p0}"));
    }
    Ok(direct)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VeroneseInvariants {
    pub squarefree_a: i64,
    pub squarefree_reg: i64,
    pub veronese_a: i64,
    pub veronese_reg: i64,
}

/// a-invariants and regularities of S_{s,k} and S^{(k)} (both of dimension s).
pub fn veronese_invariants(s: usize, k: usize) -> Result<VeroneseInvariants> {
    if k == 0 || k >= s {
        return precondition("need 1 ≤ k ≤ s − 1");
    }
    let (s, k) = (s as i64, k as i64);
    let squarefree_a = if s >= 2 * k { -Integer::div_ceil(&s, &k) } else { -Integer::div_ceil(&s, &(s - k)) };
    let veronese_a = -Integer::div_ceil(&s, &k);
    Ok(VeroneseInvariants {
        squarefree_a,
        squarefree_reg: s + squarefree_a,
        veronese_a,
        veronese_reg: s + veronese_a,
    })
}

fn subsets_of_size(s: usize, k: usize) -> Vec<Vec<u32>> {
    (0u64..1 << s)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..s).map(|i| (m >> i & 1) as u32).collect())
        .collect()
}

/// The same invariants read off the h-vectors of the hypersimplex and of the
/// dilated simplex k·Δ.
pub fn veronese_invariants_by_ehrhart(s: usize, k: usize, budget: &Budget) -> Result<VeroneseInvariants> {
    if k == 0 || k >= s {
        return precondition("need 1 ≤ k ≤ s − 1");
    }
    let hyper = LatticePolytope::from_u32(&subsets_of_size(s, k))?.ehrhart(budget)?;
    let simplex: Vec<Vec<u32>> = (0..s)
        .map(|i| (0..s).map(|j| if i == j { k as u32 } else { 0 }).collect())
        .collect();
    let dilated = LatticePolytope::from_u32(&simplex)?.ehrhart(budget)?;
    let sf_reg = hyper.h_degree() as i64;
    let v_reg = dilated.h_degree() as i64;
    Ok(VeroneseInvariants {
        squarefree_a: sf_reg - s as i64,
        squarefree_reg: sf_reg,
        veronese_a: v_reg - s as i64,
        veronese_reg: v_reg,
    })
}

/// Exponent vectors with a_i ≥ 1, (k−1)a_i ≤ Σ_{j≠i} a_j − 1, Σa ≡ 0 mod k and
/// at most k − 1 entries ≥ 2, of total degree ≤ degree_cap.
pub fn veronese_canonical_generators(s: usize, k: usize, degree_cap: u32) -> Result<Vec<ExponentVector>> {
    if !(k >= 2 && s >= 2 * k) {
        return precondition("need s ≥ 2k ≥ 4");
    }
    let mut out = Vec::new();
    let mut a = vec![1u32; s];
    if degree_cap < s as u32 {
        return Ok(out);
    }
    canonical_walk(k as u32, degree_cap, 0, &mut a, &mut out)?;
    out.sort_by(|x, y| (x.degree(), x).cmp(&(y.degree(), y)));
    Ok(out)
}

fn canonical_walk(k: u32, cap: u32, j: usize, a: &mut Vec<u32>, out: &mut Vec<ExponentVector>) -> Result<()> {
    let total: u32 = a.iter().sum();
    if j == a.len() {
        let big = a.iter().filter(|&&x| x >= 2).count() as u32;
        let balanced = a.iter().all(|&x| (k - 1) * x < total - x);
        if total % k == 0 && big < k && balanced {
            out.push(ExponentVector::new(a.clone())?);
        }
        return Ok(());
    }
    let room = cap - total;
    for extra in 0..=room {
        a[j] = 1 + extra;
        canonical_walk(k, cap, j + 1, a, out)?;
    }
    a[j] = 1;
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubringRegularityReport {
    pub degree: u64,
    #[serde(serialize_with = "crate::arith::serialize_ints")]
    pub h_vector: Vec<Int>,
    pub regularity: usize,
    pub dimension: usize,
    pub a_invariant: i64,
}

/// reg K[I] = deg h of the Newton polytope conv(G(I)), for normal uniform I.
pub fn subring_regularity(i: &MonomialIdeal, budget: &Budget) -> Result<SubringRegularityReport> {
    let Some(degree) = i.uniform_degree() else {
        return precondition("the ideal is not generated in a single degree");
    };
    if !is_normal(i, Method::Hilbert, budget)?.normal {
        return precondition("the ideal is not normal");
    }
    let pts: Vec<Vec<u32>> = i.generators().iter().map(|g| g.entries().to_vec()).collect();
    // K[Iz] = A(P): the lifted generators are the whole Hilbert basis
    let lifted: Vec<Vec<Int>> = pts
        .iter()
        .map(|p| p.iter().map(|&x| Int::from(x)).chain(std::iter::once(Int::one())).collect())
        .collect();
    let hb = RationalCone::new(lifted.clone())?.hilbert_basis(Lattice::Saturated, budget)?;
    if hb.len() != lifted.len() {
        return inconsistent("normal uniform ideal with K[Iz] ≠ A(P)");
    }
    let ehr = LatticePolytope::from_u32(&pts)?.ehrhart(budget)?;
    let regularity = ehr.h_degree();
    let dimension = incidence_rank(i);
    let a_invariant = regularity as i64 - dimension as i64;
    if a_invariant > -1 {
        return inconsistent(format!("a-invariant {a_invariant} ≥ 0"));
    }
    Ok(SubringRegularityReport { degree, h_vector: ehr.h_vector, regularity, dimension, a_invariant })
}

/// reg K[I] ≤ reg K[J] for normal k-uniform I, J with G(I) ⊆ G(J); the
/// h-vectors are also compared coefficientwise.
pub fn regularity_monotonicity_check(i: &MonomialIdeal, j: &MonomialIdeal, budget: &Budget) -> Result<bool> {
    if i.uniform_degree().is_none() || i.uniform_degree() != j.uniform_degree() {
        return precondition("both ideals must be generated in the same single degree");
    }
    if !i.generators().iter().all(|g| j.generators().contains(g)) {
        return precondition("G(I) ⊄ G(J)");
    }
    let ri = subring_regularity(i, budget)?;
    let rj = subring_regularity(j, budget)?;
    let dominated = (0..ri.h_vector.len()).all(|k| rj.h_vector.get(k).is_some_and(|y| &ri.h_vector[k] <= y));
    if ri.regularity > rj.regularity || !dominated {
        return inconsistent(format!("reg K[I] = {} > reg K[J] = {}", ri.regularity, rj.regularity));
    }
    Ok(true)
}

/// The lex-sorted exponents (a_1 > ⋯ > a_n = 0) and (b_1 > ⋯ > b_n = 0).
pub fn staircase_sequences(i: &MonomialIdeal) -> Result<(Vec<u32>, Vec<u32>)> {
    if i.nvars() != 2 {
        return precondition("m-fullness is tested for two variables");
    }
    pure_powers(i)?;
    let mut gens: Vec<(u32, u32)> = i.generators().iter().map(|g| (g.entries()[0], g.entries()[1])).collect();
    gens.sort_by(|x, y| y.0.cmp(&x.0));
    let a: Vec<u32> = gens.iter().map(|g| g.0).collect();
    // b_{n−i+1} is the t₂-exponent of the i-th generator
    let mut b: Vec<u32> = gens.iter().map(|g| g.1).collect();
    b.reverse();
    Ok((a, b))
}

/// Some k ∈ {1..n} with unit steps b_{n−i} − b_{n−i+1} = 1 for i < k, a gap of
/// at least 2 at k (unless k = n), and unit steps a_i − a_{i+1} = 1 for i ≥ k.
pub fn is_m_full_2var(i: &MonomialIdeal) -> Result<bool> {
    let (a, b) = staircase_sequences(i)?;
    let n = a.len();
    // 1-based accessors
    let av = |i: usize| a[i - 1];
    let bv = |i: usize| b[i - 1];
    Ok((1..=n).any(|k| {
        let c1 = (1..k).all(|i| bv(n - i) - bv(n - i + 1) == 1);
        let c2 = k == n || bv(n - k) - bv(n - k + 1) >= 2;
        let c3 = (k..n).all(|i| av(i) - av(i + 1) == 1);
        c1 && c2 && c3
    }))
}

/// |det A| = d for s monomials of degree d in s variables.
pub fn is_cremona_monomial(f: &[ExponentVector]) -> Result<bool> {
    let s = f.len();
    if s == 0 {
        return Err(Error::EmptyInput);
    }
    if let Some(g) = f.iter().find(|g| g.len() != s) {
        return Err(Error::LengthMismatch { expected: s, found: g.len() });
    }
    let d = f[0].degree();
    if f.iter().any(|g| g.degree() != d) {
        return precondition("the monomials have different degrees");
    }
    let used = f.iter().fold(0u64, |m, g| m | g.support_mask());
    if used.count_ones() as usize != s {
        return precondition("some variable appears in no monomial");
    }
    if (0..s).any(|k| f.iter().all(|g| g.entries()[k] > 0)) {
        return precondition("the monomials have a common factor");
    }
    let m: Vec<Vec<Int>> = f.iter().map(|g| g.entries().iter().map(|&x| Int::from(x)).collect()).collect();
    let det = determinant(&m);
    if det.is_zero() {
        return precondition("the exponent matrix is singular");
    }
    Ok(det.abs() == Int::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_rows(rows).unwrap()
    }

    fn b() -> Budget {
        Budget::default()
    }

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn multiplicity_examples() {
        let i = ideal(&[&[6, 0], &[0, 5], &[2, 2], &[3, 1]]);
        let r = multiplicity_region(&i).unwrap();
        assert_eq!((r.delta_volume.clone(), r.p0_volume.clone()), (rat(15, 1), rat(5, 1)));
        assert_eq!(multiplicity(&i, &b()).unwrap(), Int::from(20));
        assert_eq!(multiplicity(&ideal(&[&[3, 0], &[0, 7]]), &b()).unwrap(), Int::from(21));
        // 𝔪²: e = 2² by the length ℓ(S/𝔪^{2n}) = n(2n+1)
        assert_eq!(multiplicity(&ideal(&[&[2, 0], &[1, 1], &[0, 2]]), &b()).unwrap(), Int::from(4));
        assert!(multiplicity(&ideal(&[&[1, 1]]), &b()).is_err());
    }

    #[test]
    fn generator_outside_delta() {
        // (3,3) lies above the hypotenuse of conv(0, 4e₁, 4e₂): P₀ is the hypotenuse
        let i = ideal(&[&[4, 0], &[0, 4], &[3, 3]]);
        assert_eq!(multiplicity(&i, &b()).unwrap(), Int::from(16));
    }

    #[test]
    fn hilbert_function_examples() {
        let m = ideal(&[&[1, 0], &[0, 1]]);
        for n in 0..5u32 {
            assert_eq!(normalization_hilbert_function(&m, n, &b()).unwrap(), (n * (n + 1) / 2) as u64);
        }
        let i = ideal(&[&[6, 0], &[0, 5], &[2, 2], &[3, 1]]);
        let f1 = normalization_hilbert_function(&i, 1, &b()).unwrap();
        let np = NewtonPolyhedron::new(&i).unwrap();
        let brute = (0..6u32).flat_map(|x| (0..5u32).map(move |y| [x, y])).filter(|p| !np.contains(p, 1)).count();
        assert_eq!(f1, brute as u64);
    }

    #[test]
    fn veronese_closed_forms() {
        let v = veronese_invariants(6, 2).unwrap();
        assert_eq!((v.squarefree_a, v.squarefree_reg), (-3, 3));
        let v = veronese_invariants(4, 2).unwrap();
        assert_eq!((v.squarefree_a, v.squarefree_reg), (-2, 2));
        assert_eq!(veronese_invariants(5, 4).unwrap().squarefree_a, -5);
        assert!(veronese_invariants(4, 4).is_err());
    }

    #[test]
    fn veronese_by_ehrhart_small() {
        for (s, k) in [(4, 2), (5, 2), (6, 2), (6, 3), (5, 4)] {
            assert_eq!(veronese_invariants_by_ehrhart(s, k, &b()).unwrap(), veronese_invariants(s, k).unwrap(), "s={s} k={k}");
        }
    }

    #[test]
    fn canonical_generators() {
        assert!(veronese_canonical_generators(4, 2, 4).unwrap().contains(&ev(&[1, 1, 1, 1])));
        let g = veronese_canonical_generators(6, 2, 6).unwrap();
        assert_eq!(g.iter().map(|x| x.degree()).min(), Some(6));
        let g3 = veronese_canonical_generators(6, 3, 6).unwrap();
        assert!(!g3.is_empty());
        assert!(g3.iter().all(|x| x.entries().iter().filter(|&&e| e >= 2).count() <= 2));
        assert!(veronese_canonical_generators(3, 2, 6).is_err());
    }

    #[test]
    fn regularity_examples() {
        let all_pairs: Vec<Vec<u32>> = subsets_of_size(6, 2);
        let rows: Vec<&[u32]> = all_pairs.iter().map(|r| r.as_slice()).collect();
        let r = subring_regularity(&ideal(&rows), &b()).unwrap();
        assert_eq!((r.regularity, r.a_invariant), (3, -3));
        let c4 = ideal(&[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1], &[1, 0, 0, 1]]);
        let r = subring_regularity(&c4, &b()).unwrap();
        assert_eq!((r.dimension, r.regularity, r.a_invariant), (3, 1, -2));
        let principal = ideal(&[&[1, 2, 0]]);
        assert_eq!(subring_regularity(&principal, &b()).unwrap().regularity, 0);
        let triangles = ideal(&[
            &[1, 1, 0, 0, 0, 0], &[0, 1, 1, 0, 0, 0], &[1, 0, 1, 0, 0, 0],
            &[0, 0, 0, 1, 1, 0], &[0, 0, 0, 0, 1, 1], &[0, 0, 0, 1, 0, 1],
        ]);
        assert!(matches!(subring_regularity(&triangles, &b()), Err(Error::Precondition(_))));
    }

    #[test]
    fn monotonicity_examples() {
        let p3 = ideal(&[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1]]);
        let c4 = ideal(&[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1], &[1, 0, 0, 1]]);
        assert!(regularity_monotonicity_check(&p3, &c4, &b()).unwrap());
        assert!(regularity_monotonicity_check(&c4, &c4, &b()).unwrap());
        assert!(regularity_monotonicity_check(&c4, &p3, &b()).is_err());
    }

    #[test]
    fn m_full_examples() {
        let i = ideal(&[&[11, 0], &[8, 1], &[6, 2], &[5, 3], &[1, 4], &[0, 10]]);
        assert_eq!(staircase_sequences(&i).unwrap(), (vec![11, 8, 6, 5, 1, 0], vec![10, 4, 3, 2, 1, 0]));
        assert!(is_m_full_2var(&i).unwrap());
        assert!(!is_m_full_2var(&ideal(&[&[3, 0], &[0, 3]])).unwrap());
        assert!(is_m_full_2var(&ideal(&[&[2, 0], &[1, 1], &[0, 2]])).unwrap());
        assert!(is_m_full_2var(&ideal(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).is_err());
    }

    #[test]
    fn cremona_examples() {
        assert!(is_cremona_monomial(&[ev(&[0, 1, 0]), ev(&[0, 0, 1]), ev(&[1, 0, 0])]).unwrap());
        assert!(is_cremona_monomial(&[ev(&[1, 1, 0]), ev(&[0, 1, 1]), ev(&[1, 0, 1])]).unwrap());
        assert!(!is_cremona_monomial(&[ev(&[2, 0, 0]), ev(&[0, 2, 0]), ev(&[0, 0, 2])]).unwrap());
        assert!(is_cremona_monomial(&[ev(&[1, 1, 0]), ev(&[1, 1, 0]), ev(&[1, 0, 1])]).is_err());
    }
}
