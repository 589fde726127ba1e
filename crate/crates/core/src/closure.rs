//! Integral closures of powers of monomial ideals and normality.

use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{rat, Int, Rat};
use crate::budget::Budget;
use crate::clutter::Clutter;
use crate::error::{inconsistent, precondition, Error, Result};
use crate::monomial::{ExponentVector, MonomialIdeal};
use crate::polyhedra::linalg::{rank, solve};
use crate::polyhedra::polytope::clear_denominators;
use crate::polyhedra::{covering_polyhedron, lp_optimize, rees_cone, Inequality, Lattice, RationalPolyhedron, Sense};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    /// max Σλ subject to Aλ ≤ a, λ ≥ 0.
    pub value: Rat,
    /// Optimal λ (one entry per generator).
    pub witness: Vec<Rat>,
}

/// Whether tᵃ lies in the integral closure of Iⁿ, by the LP max{Σλ : Aλ ≤ a}.
pub fn membership(a: &ExponentVector, i: &MonomialIdeal, n: u32) -> Result<Membership> {
    if a.len() != i.nvars() {
        return Err(Error::LengthMismatch { expected: i.nvars(), found: a.len() });
    }
    let s = i.nvars();
    let cols: Vec<Vec<Rat>> = (0..s)
        .map(|k| i.generators().iter().map(|g| rat(g.entries()[k] as i64, 1)).collect())
        .collect();
    let alpha: Vec<Rat> = a.entries().iter().map(|&x| rat(x as i64, 1)).collect();
    let sol = lp_optimize(&cols, &alpha, Sense::Max)?;
    let member = sol.value >= rat(n as i64, 1);
    Ok(Membership { member, value: sol.value, witness: sol.witness })
}

/// NP(I) as the blocker of Q(I): x ∈ NP(I) iff ⟨x, γ⟩ ≥ d for every vertex γ/d of Q(I).
#[derive(Clone, Debug)]
pub struct NewtonPolyhedron {
    /// (γ, d) with γ integral and γ/d a vertex of Q(I).
    facets: Vec<(Vec<i128>, i128)>,
    max_exponents: Vec<u32>,
}

impl NewtonPolyhedron {
    pub fn new(i: &MonomialIdeal) -> Result<Self> {
        let s = i.nvars();
        let mut ineq = Vec::with_capacity(s + i.len());
        for k in 0..s {
            let mut e = vec![Rat::zero(); s];
            e[k] = Rat::one();
            ineq.push(Inequality::new(e, Rat::zero()));
        }
        for g in i.generators() {
            ineq.push(Inequality::new(g.entries().iter().map(|&x| rat(x as i64, 1)).collect(), Rat::one()));
        }
        let vd = RationalPolyhedron::new(s, ineq)?.vertex_data()?;
        let small = |x: &Int| x.to_i128().ok_or(Error::Overflow("Newton polyhedron facet"));
        let mut facets = Vec::with_capacity(vd.vertices.len());
        for v in &vd.vertices {
            let (g, d) = clear_denominators(v);
            facets.push((g.iter().map(small).collect::<Result<Vec<_>>>()?, small(&d)?));
        }
        Ok(NewtonPolyhedron { facets, max_exponents: i.max_exponents() })
    }

    /// (γ, d) pairs, one per vertex γ/d of Q(I).
    pub fn facets(&self) -> &[(Vec<i128>, i128)] {
        &self.facets
    }

    /// Whether a/n ∈ NP(I), i.e. tᵃ is integral over Iⁿ.
    pub fn contains(&self, a: &[u32], n: u32) -> bool {
        self.facets.iter().all(|(g, d)| {
            let lhs: i128 = g.iter().zip(a).map(|(x, &y)| x * y as i128).sum();
            lhs >= d * n as i128
        })
    }

    /// Minimal generators of the integral closure of Iⁿ.
    pub fn closure_of_power(&self, n: u32, budget: &Budget) -> Result<MonomialIdeal> {
        if n == 0 {
            return precondition("closure of the zeroth power is the unit ideal");
        }
        let hi: Vec<i128> = self
            .max_exponents
            .iter()
            .map(|&m| m as i128 * n as i128)
            .collect();
        let target: Vec<i128> = self.facets.iter().map(|(_, d)| d * n as i128).collect();
        let normals: Vec<&[i128]> = self.facets.iter().map(|(g, _)| g.as_slice()).collect();
        MonomialIdeal::new(minimal_points(&normals, &target, &hi, budget)?)
    }
}

/// Minimal a ∈ ℕˢ with a ≤ hi and ⟨γ_f, a⟩ ≥ target_f for all f (all γ_f ≥ 0),
/// possibly with non-minimal extras; callers minimalize.
pub(crate) fn minimal_points(
    normals: &[&[i128]],
    target: &[i128],
    hi: &[i128],
    budget: &Budget,
) -> Result<Vec<ExponentVector>> {
    let s = hi.len();
    // suffix[j][f] = Σ_{k ≥ j} γ_fk · hi_k
    let mut suffix = vec![vec![0i128; normals.len()]; s + 1];
    for j in (0..s).rev() {
        for (f, g) in normals.iter().enumerate() {
            suffix[j][f] = suffix[j + 1][f] + g[j] * hi[j];
        }
    }
    let mut found = Vec::new();
    let mut a = vec![0u32; s];
    let partial = vec![0i128; normals.len()];
    let st = Staircase { normals, target, hi, suffix: &suffix, budget };
    st.walk(0, &mut a, &partial, &mut found)?;
    Ok(found)
}

struct Staircase<'a> {
    normals: &'a [&'a [i128]],
    target: &'a [i128],
    hi: &'a [i128],
    suffix: &'a [Vec<i128>],
    budget: &'a Budget,
}

impl Staircase<'_> {
    // Walk coordinate j upward from its forced lower bound; stop at the first
    // value that meets every target with the remaining coordinates zero.
    fn walk(&self, j: usize, a: &mut Vec<u32>, partial: &[i128], found: &mut Vec<ExponentVector>) -> Result<()> {
        let s = self.hi.len();
        let mut lo = 0i128;
        for (f, g) in self.normals.iter().enumerate() {
            let need = self.target[f] - partial[f] - self.suffix[j + 1][f];
            if need <= 0 {
                continue;
            }
            if g[j] == 0 {
                return Ok(());
            }
            lo = lo.max((need + g[j] - 1) / g[j]);
        }
        if lo > self.hi[j] {
            return Ok(());
        }
        let mut next = partial.to_vec();
        for v in lo..=self.hi[j] {
            self.budget.charge_points(1)?;
            a[j] = v as u32;
            let mut done = true;
            for (f, g) in self.normals.iter().enumerate() {
                next[f] = partial[f] + g[j] * v;
                if next[f] < self.target[f] {
                    done = false;
                }
            }
            if done {
                let mut point = a.clone();
                for x in point.iter_mut().skip(j + 1) {
                    *x = 0;
                }
                found.push(ExponentVector::new(point)?);
                break;
            }
            if j + 1 < s {
                self.walk(j + 1, a, &next, found)?;
            }
        }
        a[j] = 0;
        Ok(())
    }
}

pub fn closure_of_power(i: &MonomialIdeal, n: u32, budget: &Budget) -> Result<MonomialIdeal> {
    NewtonPolyhedron::new(i)?.closure_of_power(n, budget)
}

/// Which normality test produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Hilbert,
    Powers,
    Both,
}

impl std::str::FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hilbert" => Ok(Method::Hilbert),
            "powers" => Ok(Method::Powers),
            "both" => Ok(Method::Both),
            other => precondition(format!("unknown method {other:?}")),
        }
    }
}

/// A monomial in the closure of Iⁿ but not in Iⁿ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub power: u32,
    pub witness: ExponentVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalityVerdict {
    pub normal: bool,
    /// The methods that completed.
    pub method: Method,
    /// Smallest failing power with a witness from the power method when it ran,
    /// otherwise from the Hilbert basis.
    pub failure: Option<Failure>,
    /// Hilbert basis elements of RC(I) outside A′, as (a, n) with n the z-degree.
    pub extra_hilbert_basis: Vec<(ExponentVector, u32)>,
    /// Method that ran out of budget, if any.
    pub timed_out: Option<Method>,
}

/// Hilbert-basis elements of the Rees cone that are not in A′.
pub fn rees_hilbert_basis_extra(i: &MonomialIdeal, budget: &Budget) -> Result<Vec<(ExponentVector, u32)>> {
    let s = i.nvars();
    let hb = rees_cone(i).hilbert_basis(Lattice::Saturated, budget)?;
    let mut out = Vec::new();
    for h in hb {
        let z = h[s].to_u32().ok_or(Error::Overflow("z-degree"))?;
        let a: Vec<u32> = h[..s]
            .iter()
            .map(|x| x.to_u32().ok_or(Error::Overflow("exponent")))
            .collect::<Result<_>>()?;
        let a = ExponentVector::new(a)?;
        let in_a_prime = match z {
            0 => a.degree() == 1,
            1 => i.generators().contains(&a),
            _ => false,
        };
        if !in_a_prime {
            out.push((a, z));
        }
    }
    out.sort_by(|x, y| (x.1, &x.0).cmp(&(y.1, &y.0)));
    Ok(out)
}

fn hilbert_method(i: &MonomialIdeal, budget: &Budget) -> Result<(Vec<(ExponentVector, u32)>, Option<Failure>)> {
    let extra = rees_hilbert_basis_extra(i, budget)?;
    let failure = extra.first().map(|(a, z)| Failure { power: *z, witness: a.clone() });
    Ok((extra, failure))
}

/// Smallest n in 1..=up_to with closure(Iⁿ) ≠ Iⁿ, with a witness generator.
pub fn first_non_closed_power(i: &MonomialIdeal, up_to: u32, budget: &Budget) -> Result<Option<Failure>> {
    let np = NewtonPolyhedron::new(i)?;
    let mut power = i.clone();
    for n in 1..=up_to {
        if n > 1 {
            power = power.product(i)?;
        }
        let closure = np.closure_of_power(n, budget)?;
        if let Some(w) = closure.generators().iter().find(|g| !power.contains(g)) {
            return Ok(Some(Failure { power: n, witness: w.clone() }));
        }
    }
    Ok(None)
}

fn powers_method(i: &MonomialIdeal, budget: &Budget) -> Result<Option<Failure>> {
    let bound = i.nvars().saturating_sub(1).max(1) as u32;
    first_non_closed_power(i, bound, budget)
}

/// Normality of I by the Hilbert basis of RC(I), by closures of powers up to
/// s − 1, or both (which must agree).
pub fn is_normal(i: &MonomialIdeal, method: Method, budget: &Budget) -> Result<NormalityVerdict> {
    let run_h = matches!(method, Method::Hilbert | Method::Both);
    let run_p = matches!(method, Method::Powers | Method::Both);
    let (h, h_timed) = split_budget(run_h.then(|| budget.scoped(|b| hilbert_method(i, b))))?;
    let (p, p_timed) = split_budget(run_p.then(|| budget.scoped(|b| powers_method(i, b))))?;
    let timed_out = match (h_timed, p_timed) {
        (true, true) => {
            return Err(Error::Budget { what: "normality (both methods)", limit: budget.points });
        }
        (true, false) => Some(Method::Hilbert),
        (false, true) => Some(Method::Powers),
        _ => None,
    };
    if h_timed && !run_p {
        return Err(Error::Budget { what: "normality (Hilbert basis)", limit: budget.points });
    }
    if p_timed && !run_h {
        return Err(Error::Budget { what: "normality (powers)", limit: budget.points });
    }
    match (h, p) {
        (Some((extra, hf)), Some(pf)) => {
            let hn = hf.as_ref().map(|f| f.power);
            let pn = pf.as_ref().map(|f| f.power);
            if hn != pn {
                return inconsistent(format!(
                    "normality methods disagree: Hilbert basis first fails at {hn:?}, powers at {pn:?}"
                ));
            }
            Ok(NormalityVerdict {
                normal: pf.is_none(),
                method: Method::Both,
                failure: pf,
                extra_hilbert_basis: extra,
                timed_out,
            })
        }
        (Some((extra, hf)), None) => Ok(NormalityVerdict {
            normal: hf.is_none(),
            method: Method::Hilbert,
            failure: hf,
            extra_hilbert_basis: extra,
            timed_out,
        }),
        (None, Some(pf)) => Ok(NormalityVerdict {
            normal: pf.is_none(),
            method: Method::Powers,
            failure: pf,
            extra_hilbert_basis: Vec::new(),
            timed_out,
        }),
        (None, None) => unreachable!("at least one method ran"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizationIndex {
    pub index: u32,
    /// s − 1, from stabilization of the filtration for n ≥ s.
    pub dimension_bound: u32,
    /// rank(A) − 1 when the generators lie on an affine hyperplane missing 0.
    pub hyperplane_bound: Option<u32>,
}

/// Whether the generators lie on a hyperplane ⟨c, x⟩ = 1.
pub fn on_affine_hyperplane(i: &MonomialIdeal) -> bool {
    let a: Vec<Vec<Rat>> = i
        .generators()
        .iter()
        .map(|g| g.entries().iter().map(|&x| rat(x as i64, 1)).collect())
        .collect();
    solve(&a, &vec![Rat::one(); i.len()]).is_some()
}

pub fn incidence_rank(i: &MonomialIdeal) -> usize {
    let rows: Vec<Vec<Int>> = i
        .generators()
        .iter()
        .map(|g| g.entries().iter().map(|&x| Int::from(x)).collect())
        .collect();
    rank(&rows)
}

/// N(I): least N with closure(I^{n+1}) = I·closure(Iⁿ) for all n ≥ N. Every
/// n ≤ s − 2 is checked, so the hyperplane bound is verified rather than used.
pub fn normalization_index(i: &MonomialIdeal, budget: &Budget) -> Result<NormalizationIndex> {
    let s = i.nvars() as u32;
    let np = NewtonPolyhedron::new(i)?;
    let mut index = 0;
    let mut prev: Option<MonomialIdeal> = None; // closure of Iⁿ, None for n = 0
    for n in 0..s.saturating_sub(1) {
        let next = np.closure_of_power(n + 1, budget)?;
        let product = match &prev {
            None => i.clone(),
            Some(c) => i.product(c)?,
        };
        if product != next {
            index = n + 1;
        }
        prev = Some(next);
    }
    let hyperplane_bound = on_affine_hyperplane(i).then(|| incidence_rank(i).saturating_sub(1) as u32);
    if let Some(b) = hyperplane_bound {
        if index > b {
            return inconsistent("normalization index exceeds the hyperplane bound");
        }
    }
    Ok(NormalizationIndex { index, dimension_bound: s.saturating_sub(1), hyperplane_bound })
}

/// Whether gr_I(S) is reduced: S[Iz] normal and Q(I) integral.
pub fn is_gr_reduced(i: &MonomialIdeal, budget: &Budget) -> Result<bool> {
    let c = Clutter::from_ideal(i)?;
    if c.covering_number(budget)? < 2 {
        return precondition("height of the ideal must be at least two");
    }
    if !covering_polyhedron(i)?.vertex_data()?.is_integral() {
        return Ok(false);
    }
    Ok(is_normal(i, Method::Both, budget)?.normal)
}

/// Per-power closures plus the normality verdict and normalization index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureReport {
    pub closures: Vec<(u32, MonomialIdeal)>,
    pub verdict: NormalityVerdict,
    pub normalization: NormalizationIndex,
}

pub fn closure_report(i: &MonomialIdeal, max_power: u32, method: Method, budget: &Budget) -> Result<ClosureReport> {
    let np = NewtonPolyhedron::new(i)?;
    let closures = (1..=max_power)
        .map(|n| Ok((n, np.closure_of_power(n, budget)?)))
        .collect::<Result<Vec<_>>>()?;
    let verdict = is_normal(i, method, budget)?;
    let normalization = normalization_index(i, budget)?;
    if verdict.normal && normalization.index != 0 {
        return inconsistent("normal ideal with positive normalization index");
    }
    Ok(ClosureReport { closures, verdict, normalization })
}

/// Whether (tᵃ)ᵖ ∈ I^{pn} for some p ≤ `max_p`.
pub fn power_oracle(a: &ExponentVector, i: &MonomialIdeal, n: u32, max_p: u32) -> Result<bool> {
    for p in 1..=max_p {
        let ap = a.checked_scale(p)?;
        if i.power(p * n)?.contains(&ap) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Lcm of the denominators of a rational vector (1 for the zero vector).
pub fn denominator_lcm(v: &[Rat]) -> u32 {
    clear_denominators(v).1.to_u32().unwrap_or(u32::MAX).max(1)
}

/// Runs an optional computation, turning budget exhaustion into a flag.
fn split_budget<T>(r: Option<Result<T>>) -> Result<(Option<T>, bool)> {
    match r {
        None => Ok((None, false)),
        Some(Ok(v)) => Ok((Some(v), false)),
        Some(Err(Error::Budget { .. })) => Ok((None, true)),
        Some(Err(e)) => Err(e),
    }
}
