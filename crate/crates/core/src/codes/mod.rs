//! Projective Reed–Muller-type codes over small fields, their generalized
//! Hamming weights, v-numbers, and the W₂ graph test.

mod field;
mod vnumber;

pub use field::GaloisField;
pub use vnumber::{v_number_monomial, w2_test, MonomialVNumber, W2Report};

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{inconsistent, precondition, Error, Result};
use crate::monomial::{monomials_of_degree, ExponentVector};

/// Distinct points of P^{s-1}(F_q), each scaled so its first non-zero
/// coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSetOverFq {
    field: GaloisField,
    s: usize,
    points: Vec<Vec<u8>>,
    rescaled: usize,
}

impl PointSetOverFq {
    /// Normalizes every point projectively; at least two distinct points are
    /// required, since every weight statement needs |X| ≥ 2.
    pub fn new(q: u8, s: usize, points: Vec<Vec<u8>>) -> Result<Self> {
        let field = GaloisField::new(q)?;
        if s == 0 {
            return precondition("points need at least one coordinate");
        }
        if points.len() > 64 {
            return precondition("at most 64 points are supported");
        }
        let mut out: Vec<Vec<u8>> = Vec::with_capacity(points.len());
        let mut rescaled = 0;
        for (k, p) in points.into_iter().enumerate() {
            if p.len() != s {
                return Err(Error::LengthMismatch { expected: s, found: p.len() });
            }
            if let Some(&bad) = p.iter().find(|&&c| c >= q) {
                return precondition(format!("coordinate {bad} of point {} is not in 0..{q}", k + 1));
            }
            let Some(&lead) = p.iter().find(|&&c| c != 0) else {
                return precondition(format!("point {} is the zero vector", k + 1));
            };
            let inv = field.inv(lead);
            let n: Vec<u8> = p.iter().map(|&c| field.mul(c, inv)).collect();
            if n != p {
                rescaled += 1;
            }
            if out.contains(&n) {
                return precondition(format!("point {} repeats an earlier projective point", k + 1));
            }
            out.push(n);
        }
        if out.len() < 2 {
            return precondition("at least two points are required");
        }
        Ok(PointSetOverFq { field, s, points: out, rescaled })
    }

    /// All q^{s-1} points of [F_q^{s-1} × {1}].
    pub fn affine_grid(q: u8, s: usize) -> Result<Self> {
        if s < 2 {
            return precondition("the affine grid needs s ≥ 2");
        }
        let n = (q as usize).checked_pow(s as u32 - 1).filter(|&n| n <= 64);
        let Some(n) = n else {
            return precondition("too many points");
        };
        let pts = (0..n)
            .map(|mut i| {
                let mut p = vec![0u8; s];
                for c in p.iter_mut().take(s - 1) {
                    *c = (i % q as usize) as u8;
                    i /= q as usize;
                }
                p[s - 1] = 1;
                p
            })
            .collect();
        PointSetOverFq::new(q, s, pts)
    }

    /// Every point of P^{s-1}(F_q).
    pub fn projective_space(q: u8, s: usize) -> Result<Self> {
        let total = (q as u64).checked_pow(s as u32).filter(|&t| t <= 1 << 16);
        let Some(total) = total else {
            return precondition("projective space too large");
        };
        let mut pts = Vec::new();
        for mut i in 1..total {
            let mut p = vec![0u8; s];
            for c in p.iter_mut() {
                *c = (i % q as u64) as u8;
                i /= q as u64;
            }
            if p.iter().find(|&&c| c != 0) == Some(&1) {
                pts.push(p);
            }
        }
        PointSetOverFq::new(q, s, pts)
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    pub fn order(&self) -> u8 {
        self.field.order()
    }

    pub fn nvars(&self) -> usize {
        self.s
    }

    pub fn points(&self) -> &[Vec<u8>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// How many input points were rescaled by the normalization.
    pub fn rescaled(&self) -> usize {
        self.rescaled
    }

    /// t^a evaluated at the i-th point.
    pub fn evaluate(&self, a: &ExponentVector, i: usize) -> u8 {
        let f = &self.field;
        a.entries()
            .iter()
            .zip(&self.points[i])
            .fold(1, |acc, (&e, &c)| f.mul(acc, f.pow(c, e)))
    }

    fn evaluation_row(&self, a: &ExponentVector) -> Vec<u8> {
        (0..self.len()).map(|i| self.evaluate(a, i)).collect()
    }
}

/// C_X(d): the image of S_d under evaluation at the points of X.
#[derive(Clone, Debug)]
pub struct EvaluationCode {
    degree: u32,
    monomials: Vec<ExponentVector>,
    generator: Vec<Vec<u8>>,
    basis: Vec<Vec<u8>>,
    field: GaloisField,
}

impl EvaluationCode {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn length(&self) -> usize {
        self.generator.first().map_or(0, |r| r.len())
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// The degree-d monomials, in the order of the generator rows.
    pub fn monomials(&self) -> &[ExponentVector] {
        &self.monomials
    }

    /// One row per monomial: its values at the points.
    pub fn generator_matrix(&self) -> &[Vec<u8>] {
        &self.generator
    }

    /// Reduced row echelon basis of the code.
    pub fn basis(&self) -> &[Vec<u8>] {
        &self.basis
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    fn combine(&self, coeffs: &[u8]) -> u64 {
        support_of(&self.field, &self.basis, coeffs)
    }
}

fn support_of(f: &GaloisField, rows: &[Vec<u8>], coeffs: &[u8]) -> u64 {
    let m = rows.first().map_or(0, |r| r.len());
    let mut mask = 0u64;
    for j in 0..m {
        let mut v = 0u8;
        for (c, row) in coeffs.iter().zip(rows) {
            if *c != 0 {
                v = f.add(v, f.mul(*c, row[j]));
            }
        }
        if v != 0 {
            mask |= 1 << j;
        }
    }
    mask
}

pub fn build_code(x: &PointSetOverFq, d: u32) -> Result<EvaluationCode> {
    if d == 0 {
        return precondition("codes are built in degree d ≥ 1");
    }
    let full = if x.s == 64 { u64::MAX } else { (1u64 << x.s) - 1 };
    let monomials = monomials_of_degree(x.s, full, d);
    let generator: Vec<Vec<u8>> = monomials.iter().map(|a| x.evaluation_row(a)).collect();
    let mut basis = generator.clone();
    x.field.row_reduce(&mut basis);
    Ok(EvaluationCode { degree: d, monomials, generator, basis, field: x.field.clone() })
}

/// H_X(d) = dim C_X(d), with H_X(0) = 1.
pub fn hilbert_function(x: &PointSetOverFq, d: u32) -> Result<usize> {
    if d == 0 {
        return Ok(1);
    }
    Ok(build_code(x, d)?.dimension())
}

/// First d with H_X(d) = |X|; equals reg(S/I(X)) for a set of points.
pub fn regularity_threshold(x: &PointSetOverFq) -> Result<u32> {
    let mut d = 1;
    loop {
        if hilbert_function(x, d)? == x.len() {
            return Ok(d);
        }
        // H_X is strictly increasing until it reaches |X|.
        if d as usize >= x.len() {
            return inconsistent("Hilbert function of points failed to stabilize");
        }
        d += 1;
    }
}

/// Number of r-dimensional subspaces of F_q^k.
pub fn subspace_count(q: u64, k: usize, r: usize) -> Option<u64> {
    if r > k {
        return Some(0);
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..r {
        num = num.checked_mul((q as u128).checked_pow((k - i) as u32)? - 1)?;
        den = den.checked_mul((q as u128).checked_pow((i + 1) as u32)? - 1)?;
    }
    u64::try_from(num / den).ok()
}

/// Calls `visit` with the rows of every r × k matrix in reduced row echelon
/// form of rank r, i.e. once per r-dimensional subspace of F_q^k.
fn for_each_subspace(
    q: u8,
    k: usize,
    r: usize,
    budget: &Budget,
    mut visit: impl FnMut(&[Vec<u8>]),
) -> Result<()> {
    let count = subspace_count(q as u64, k, r).ok_or(Error::Overflow("subspace count"))?;
    budget.charge_subspaces(count)?;
    let mut pivots: Vec<usize> = (0..r).collect();
    loop {
        let free: Vec<(usize, usize)> = (0..r)
            .flat_map(|i| {
                let pv = &pivots;
                (pv[i] + 1..k).filter(move |j| !pv.contains(j)).map(move |j| (i, j))
            })
            .collect();
        let mut rows = vec![vec![0u8; k]; r];
        for (i, &p) in pivots.iter().enumerate() {
            rows[i][p] = 1;
        }
        let mut digits = vec![0u8; free.len()];
        'odometer: loop {
            for (&(i, j), &v) in free.iter().zip(&digits) {
                rows[i][j] = v;
            }
            visit(&rows);
            for dgt in digits.iter_mut() {
                *dgt += 1;
                if *dgt < q {
                    continue 'odometer;
                }
                *dgt = 0;
            }
            break;
        }
        // Next pivot set in lexicographic order.
        let Some(i) = (0..r).rev().find(|&i| pivots[i] < k - r + i) else {
            return Ok(());
        };
        pivots[i] += 1;
        for t in i + 1..r {
            pivots[t] = pivots[t - 1] + 1;
        }
    }
}

/// Smallest support of an r-dimensional subcode, by exhaustive enumeration of
/// the subcodes.
pub fn weight_by_subcodes(c: &EvaluationCode, r: usize, budget: &Budget) -> Result<usize> {
    check_rank(c, r)?;
    let mut best = usize::MAX;
    for_each_subspace(c.field.order(), c.dimension(), r, budget, |rows| {
        let mask = rows.iter().fold(0, |m, row| m | c.combine(row));
        best = best.min(mask.count_ones() as usize);
    })?;
    Ok(best)
}

/// The same weight via δ_r = min{|T| : dim{c ∈ C : supp c ⊆ T} ≥ r}, with
/// dim of that subcode = k − rank of the columns outside T.
pub fn weight_by_supports(c: &EvaluationCode, r: usize, budget: &Budget) -> Result<usize> {
    check_rank(c, r)?;
    let (m, k) = (c.length(), c.dimension());
    budget.check_search_vertices(m)?;
    budget.charge_subspaces(1 << m)?;
    let mut best = m;
    for outside in 0u64..1 << m {
        let t = m - outside.count_ones() as usize;
        if t >= best {
            continue;
        }
        let cols: Vec<Vec<u8>> = c
            .basis
            .iter()
            .map(|row| crate::clutter::bits(outside).map(|j| row[j]).collect())
            .collect();
        if k - c.field.rank(&cols) >= r {
            best = t;
        }
    }
    Ok(best)
}

fn check_rank(c: &EvaluationCode, r: usize) -> Result<()> {
    if r == 0 || r > c.dimension() {
        return precondition(format!("r must lie in 1..={}", c.dimension()));
    }
    if c.length() > 64 {
        return precondition("codes of length above 64 are not supported");
    }
    Ok(())
}

/// Subcode enumeration is attempted for r = 1, and for r ≤ 3 when k ≤ 8.
const SUBCODE_MAX_DIMENSION: usize = 8;
const SUBCODE_MAX_RANK: usize = 3;

/// δ_r(C). Inside the enumeration limits the subcode search runs and must
/// agree with the support computation; outside them only the latter runs.
pub fn generalized_weight(c: &EvaluationCode, r: usize, budget: &Budget) -> Result<usize> {
    let by_supports = weight_by_supports(c, r, budget)?;
    if r == 1 || (c.dimension() <= SUBCODE_MAX_DIMENSION && r <= SUBCODE_MAX_RANK) {
        let by_subcodes = weight_by_subcodes(c, r, budget)?;
        if by_subcodes != by_supports {
            return inconsistent(format!(
                "weight δ_{r}: subcodes give {by_subcodes}, supports give {by_supports}"
            ));
        }
    }
    Ok(by_supports)
}

pub fn minimum_distance(c: &EvaluationCode, budget: &Budget) -> Result<usize> {
    generalized_weight(c, 1, budget)
}

/// δ_1, …, δ_k, checked to be strictly increasing.
pub fn weight_hierarchy(c: &EvaluationCode, budget: &Budget) -> Result<Vec<usize>> {
    let w: Vec<usize> = (1..=c.dimension())
        .map(|r| generalized_weight(c, r, budget))
        .collect::<Result<_>>()?;
    if w.windows(2).any(|p| p[0] >= p[1]) {
        return inconsistent(format!("weight hierarchy {w:?} is not strictly increasing"));
    }
    Ok(w)
}

/// δ_I(d, r) and ϑ_I(d, r) for I = I(X), from zero counts of forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GmdReport {
    pub degree: u32,
    pub r: usize,
    /// deg(S/I) − max |V_X(F)| over F ∈ 𝓕_{d,r}.
    pub gmd: usize,
    /// min |X ∖ V_X(F)| over F ∈ 𝓕_{d,r}.
    pub vasconcelos: usize,
    /// 𝓕_{d,r} is empty (every r forms have no common zero on X).
    pub family_empty: bool,
    /// Monomials whose classes form a basis of S_d / I(X)_d.
    #[serde(serialize_with = "serialize_monomials")]
    pub standard_monomials: Vec<ExponentVector>,
}

fn serialize_monomials<S: serde::Serializer>(v: &[ExponentVector], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|a| a.to_string()))
}

/// Enumerates r-dimensional spaces of forms modulo I(X)_d (one RREF basis
/// per space) and evaluates them point by point.
pub fn gmd_and_vasconcelos(x: &PointSetOverFq, d: u32, r: usize, budget: &Budget) -> Result<GmdReport> {
    let code = build_code(x, d)?;
    check_rank(&code, r)?;
    let f = &x.field;
    // Greedy basis of S_d modulo the forms vanishing on X.
    let mut standard = Vec::new();
    let mut values: Vec<Vec<u8>> = Vec::new();
    for (a, row) in code.monomials.iter().zip(&code.generator) {
        values.push(row.clone());
        if f.rank(&values) == values.len() {
            standard.push(a.clone());
        } else {
            values.pop();
        }
    }
    let m = x.len();
    let mut max_zeros: Option<usize> = None;
    let mut min_nonzeros: Option<usize> = None;
    for_each_subspace(f.order(), standard.len(), r, budget, |coeffs| {
        let mut zeros = 0;
        for p in 0..m {
            let all_vanish = coeffs.iter().all(|form| {
                form.iter().zip(&standard).fold(0u8, |acc, (&c, a)| {
                    if c == 0 { acc } else { f.add(acc, f.mul(c, x.evaluate(a, p))) }
                }) == 0
            });
            if all_vanish {
                zeros += 1;
            }
        }
        if zeros > 0 {
            max_zeros = Some(max_zeros.map_or(zeros, |z: usize| z.max(zeros)));
            let nz = m - zeros;
            min_nonzeros = Some(min_nonzeros.map_or(nz, |z: usize| z.min(nz)));
        }
    })?;
    Ok(GmdReport {
        degree: d,
        r,
        gmd: m - max_zeros.unwrap_or(0),
        vasconcelos: min_nonzeros.unwrap_or(m),
        family_empty: max_zeros.is_none(),
        standard_monomials: standard,
    })
}

/// v(I(X)) by the rank test, with the point it separates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointsVNumber {
    pub v: u32,
    /// 0-based index of a point P with some f ∈ S_v vanishing exactly off P.
    pub point: usize,
}

/// Smallest d such that some f ∈ S_d vanishes on X ∖ {P} but not at P:
/// dropping the column of P lowers the rank of the evaluation matrix.
pub fn v_number_points(x: &PointSetOverFq) -> Result<PointsVNumber> {
    let f = &x.field;
    for d in 1..=x.len() as u32 {
        let code = build_code(x, d)?;
        let k = code.dimension();
        for p in 0..x.len() {
            let rows: Vec<Vec<u8>> = code
                .basis
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(j, _)| j != p).map(|(_, &v)| v).collect())
                .collect();
            if f.rank(&rows) < k {
                return Ok(PointsVNumber { v: d, point: p });
            }
        }
    }
    inconsistent("no separating form up to degree |X|")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeWeights {
    pub degree: u32,
    pub dimension: usize,
    /// δ_X(d, r) for r = 1, 2, … up to the requested maximum or k.
    pub weights: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightReport {
    pub length: usize,
    pub degrees: Vec<DegreeWeights>,
    pub v_number: u32,
    pub regularity_threshold: u32,
}

/// Weights for d = 1 through one past the regularity threshold, with the
/// structural laws enforced: δ_X(d,1) strictly decreasing until it hits 1,
/// the first such d equal to the v-number, strict hierarchies, and
/// δ_X(d,r) = r from the threshold on.
pub fn weight_report(x: &PointSetOverFq, max_r: usize, budget: &Budget) -> Result<WeightReport> {
    if max_r == 0 {
        return precondition("max_r must be positive");
    }
    let threshold = regularity_threshold(x)?;
    let v = v_number_points(x)?;
    let mut degrees = Vec::new();
    for d in 1..=threshold + 1 {
        let code = build_code(x, d)?;
        let top = max_r.min(code.dimension());
        let weights: Vec<usize> = (1..=top)
            .map(|r| generalized_weight(&code, r, budget))
            .collect::<Result<_>>()?;
        if weights.windows(2).any(|p| p[0] >= p[1]) {
            return inconsistent(format!("degree {d}: hierarchy {weights:?} not strictly increasing"));
        }
        if d >= threshold && weights.iter().enumerate().any(|(i, &w)| w != i + 1) {
            return inconsistent(format!("degree {d} ≥ threshold but weights {weights:?}"));
        }
        degrees.push(DegreeWeights { degree: d, dimension: code.dimension(), weights });
    }
    for pair in degrees.windows(2) {
        let (a, b) = (pair[0].weights[0], pair[1].weights[0]);
        if (a > 1 && b >= a) || (a == 1 && b != 1) {
            return inconsistent(format!("minimum distance went from {a} to {b}"));
        }
    }
    let first_one = degrees.iter().find(|w| w.weights[0] == 1).map(|w| w.degree);
    if first_one != Some(v.v) {
        return inconsistent(format!(
            "v-number {} but first degree with distance 1 is {first_one:?}",
            v.v
        ));
    }
    Ok(WeightReport { length: x.len(), degrees, v_number: v.v, regularity_threshold: threshold })
}
