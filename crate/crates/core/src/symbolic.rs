//! Symbolic powers of squarefree monomial ideals, Simis ideals and the
//! ic-resurgence.

use std::collections::BTreeMap;

use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{rat, Int, Rat};
use crate::budget::Budget;
use crate::closure::{is_normal, Method, NewtonPolyhedron};
use crate::clutter::{bits, Clutter};
use crate::error::{inconsistent, precondition, Error, Result};
use crate::monomial::{monomials_of_degree, ExponentVector, MonomialIdeal};
use crate::polyhedra::dd::extreme_rays;
use crate::polyhedra::{covering_polyhedron, lp_optimize, Lattice, RationalCone, Sense};

fn clutter_of(i: &MonomialIdeal) -> Result<Clutter> {
    if !i.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    Clutter::from_ideal(i)
}

/// I⁽ⁿ⁾ for n ≥ 1, computed by both routes and cached once they agree.
#[derive(Clone, Debug)]
pub struct SymbolicPowerCache {
    ideal: MonomialIdeal,
    /// Minimal primes as vertex masks (the minimal vertex covers).
    primes: Vec<u64>,
    powers: BTreeMap<u32, MonomialIdeal>,
}

impl SymbolicPowerCache {
    pub fn new(i: &MonomialIdeal, budget: &Budget) -> Result<Self> {
        let c = clutter_of(i)?;
        budget.check_search_vertices(c.nvars())?;
        let primes = c.minimal_covers();
        let mut powers = BTreeMap::new();
        powers.insert(1, i.clone());
        Ok(SymbolicPowerCache { ideal: i.clone(), primes, powers })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Largest height of a minimal prime.
    pub fn big_height(&self) -> usize {
        self.primes.iter().map(|p| p.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn get(&mut self, n: u32, budget: &Budget) -> Result<&MonomialIdeal> {
        if n == 0 {
            return precondition("symbolic powers start at n = 1");
        }
        if !self.powers.contains_key(&n) {
            let a = self.by_primes(n, budget)?;
            let b = self.by_polyhedron(n, budget)?;
            if a != b {
                return inconsistent(format!("the two routes to I^({n}) disagree"));
            }
            self.powers.insert(n, a);
        }
        Ok(&self.powers[&n])
    }

    /// 𝔭₁ⁿ ∩ ⋯ ∩ 𝔭_rⁿ by pairwise lcm with minimalization at each step.
    pub fn by_primes(&self, n: u32, budget: &Budget) -> Result<MonomialIdeal> {
        let s = self.ideal.nvars();
        let mut acc: Option<MonomialIdeal> = None;
        for &p in &self.primes {
            let pn = MonomialIdeal::new(monomials_of_degree(s, p, n))?;
            acc = Some(match acc {
                None => pn,
                Some(a) => {
                    budget.charge_points((a.len() * pn.len()) as u64)?;
                    a.intersection(&pn)?
                }
            });
        }
        acc.ok_or(Error::EmptyInput)
    }

    /// Minimal a with a/n ∈ Q(I∨): ⟨a, u⟩ ≥ n for every minimal cover u, inside [0, n]ˢ.
    pub fn by_polyhedron(&self, n: u32, budget: &Budget) -> Result<MonomialIdeal> {
        let s = self.ideal.nvars();
        let covers: Vec<Vec<i128>> = self
            .primes
            .iter()
            .map(|&p| (0..s).map(|k| (p >> k & 1) as i128).collect())
            .collect();
        let normals: Vec<&[i128]> = covers.iter().map(|c| c.as_slice()).collect();
        let target = vec![n as i128; covers.len()];
        let hi = vec![n as i128; s];
        MonomialIdeal::new(crate::closure::minimal_points(&normals, &target, &hi, budget)?)
    }

    /// tᵃ ∈ I⁽ⁿ⁾ read off the covers.
    pub fn contains(&self, a: &ExponentVector, n: u32) -> bool {
        self.primes
            .iter()
            .all(|&p| bits(p).map(|k| a.entries()[k] as u64).sum::<u64>() >= n as u64)
    }
}

pub fn symbolic_power(i: &MonomialIdeal, n: u32, budget: &Budget) -> Result<MonomialIdeal> {
    Ok(SymbolicPowerCache::new(i, budget)?.get(n, budget)?.clone())
}

/// Whether the covering polyhedron {x ≥ 0 : Ax ≥ 1} has only integral vertices.
pub fn covering_polyhedron_integral(i: &MonomialIdeal) -> Result<bool> {
    Ok(covering_polyhedron(i)?.vertex_data()?.is_integral())
}

/// Iⁿ = I⁽ⁿ⁾ for all n, decided as "S[Iz] normal and Q(I) integral".
pub fn is_simis(i: &MonomialIdeal, budget: &Budget) -> Result<bool> {
    clutter_of(i)?;
    if !covering_polyhedron_integral(i)? {
        return Ok(false);
    }
    Ok(is_normal(i, Method::Hilbert, budget)?.normal)
}

/// Max-flow min-cut, through its equivalence with the Simis property.
pub fn has_mfmc(i: &MonomialIdeal, budget: &Budget) -> Result<bool> {
    is_simis(i, budget)
}

/// A weight vector where the packing LP, the integer packing and the integer
/// covering do not all agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MfmcGap {
    pub alpha: Vec<u32>,
    #[serde(serialize_with = "crate::arith::serialize_rat")]
    pub lp_value: Rat,
    /// max Σy over integral y ≥ 0 with Ay ≤ α.
    pub integer_packing: u64,
    /// min ⟨α, x⟩ over vertex covers x.
    pub integer_cover: u64,
}

/// Sweeps every α ∈ {0..max_entry}ˢ and returns the first gap, if any.
pub fn mfmc_spot_check(i: &MonomialIdeal, max_entry: u32, budget: &Budget) -> Result<Option<MfmcGap>> {
    let c = clutter_of(i)?;
    let s = c.nvars();
    let covers = c.minimal_covers();
    let edges = c.edges().to_vec();
    let cols: Vec<Vec<Rat>> = (0..s)
        .map(|k| edges.iter().map(|&e| rat((e >> k & 1) as i64, 1)).collect())
        .collect();
    let mut alpha = vec![0u32; s];
    loop {
        budget.charge_points(1)?;
        let alpha_r: Vec<Rat> = alpha.iter().map(|&x| rat(x as i64, 1)).collect();
        let lp_value = lp_optimize(&cols, &alpha_r, Sense::Max)?.value;
        let cover = covers
            .iter()
            .map(|&u| bits(u).map(|k| alpha[k] as u64).sum::<u64>())
            .min()
            .unwrap_or(0);
        let mut best = 0;
        let mut room: Vec<u32> = alpha.clone();
        pack(&edges, 0, 0, &mut room, &mut best);
        if rat(best as i64, 1) != lp_value || rat(cover as i64, 1) != lp_value {
            return Ok(Some(MfmcGap { alpha, lp_value, integer_packing: best, integer_cover: cover }));
        }
        // next α in the box
        let mut k = 0;
        while k < s && alpha[k] == max_entry {
            alpha[k] = 0;
            k += 1;
        }
        if k == s {
            return Ok(None);
        }
        alpha[k] += 1;
    }
}

fn pack(edges: &[u64], from: usize, count: u64, room: &mut [u32], best: &mut u64) {
    *best = (*best).max(count);
    for j in from..edges.len() {
        if bits(edges[j]).all(|k| room[k] > 0) {
            bits(edges[j]).for_each(|k| room[k] -= 1);
            pack(edges, j, count + 1, room, best);
            bits(edges[j]).for_each(|k| room[k] += 1);
        }
    }
}

/// Hilbert basis of the Simis cone {(a, n) ≥ 0 : ⟨a, u⟩ ≥ n for every minimal
/// cover u}, as (a, n) pairs. Each pair certifies tᵃ ∈ I⁽ⁿ⁾.
pub fn symbolic_rees_generators(i: &MonomialIdeal, budget: &Budget) -> Result<Vec<(ExponentVector, u32)>> {
    let cache = SymbolicPowerCache::new(i, budget)?;
    let s = i.nvars();
    let mut rows: Vec<Vec<Int>> = (0..=s)
        .map(|k| (0..=s).map(|j| Int::from((j == k) as i64)).collect())
        .collect();
    for &u in cache.primes() {
        let mut r: Vec<Int> = (0..s).map(|k| Int::from((u >> k & 1) as i64)).collect();
        r.push(-Int::one());
        rows.push(r);
    }
    let rays = extreme_rays(&rows, s + 1)?;
    let hb = RationalCone::new(rays)?.hilbert_basis(Lattice::Saturated, budget)?;
    let mut out = Vec::with_capacity(hb.len());
    for v in hb {
        let e = v
            .iter()
            .map(|x| x.to_u32().ok_or(Error::Overflow("Simis cone Hilbert basis")))
            .collect::<Result<Vec<u32>>>()?;
        let n = e[s];
        let a = ExponentVector::new(e[..s].to_vec())?;
        if !cache.contains(&a, n) {
            return inconsistent("Simis cone basis element outside the symbolic power");
        }
        out.push((a, n));
    }
    out.sort_by(|x, y| (x.1, &x.0).cmp(&(y.1, &y.0)));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResurgenceReport {
    #[serde(serialize_with = "crate::arith::serialize_rat")]
    pub rho_ic: Rat,
    /// Vertex of Q(I) in the minimizing pair.
    #[serde(serialize_with = "crate::arith::serialize_rats")]
    pub u: Vec<Rat>,
    /// Vertex of Q(I∨) in the minimizing pair.
    #[serde(serialize_with = "crate::arith::serialize_rats")]
    pub v: Vec<Rat>,
    pub ceiling: u64,
    pub q_integral: bool,
    pub dual_q_integral: bool,
}

/// 1/ρ_ic = min ⟨u, v⟩ over vertices u of Q(I) and v of Q(I∨).
pub fn ic_resurgence(i: &MonomialIdeal, budget: &Budget) -> Result<ResurgenceReport> {
    let c = clutter_of(i)?;
    budget.check_search_vertices(c.nvars())?;
    let dual = c.blocker().to_ideal();
    let vi = covering_polyhedron(i)?.vertex_data()?;
    let vd = covering_polyhedron(&dual)?.vertex_data()?;
    let mut best: Option<(Rat, usize, usize)> = None;
    for (a, u) in vi.vertices.iter().enumerate() {
        for (b, v) in vd.vertices.iter().enumerate() {
            budget.charge_points(1)?;
            let p: Rat = u.iter().zip(v).map(|(x, y)| x * y).sum();
            if best.as_ref().is_none_or(|(q, _, _)| p < *q) {
                best = Some((p, a, b));
            }
        }
    }
    let (m, a, b) = best.ok_or(Error::EmptyInput)?;
    if m.is_zero() {
        return inconsistent("a vertex pair with ⟨u, v⟩ = 0");
    }
    let rho_ic = m.recip();
    let q_integral = vi.is_integral();
    let dual_q_integral = vd.is_integral();
    if rho_ic < Rat::one() || (rho_ic == Rat::one()) != q_integral || q_integral != dual_q_integral {
        return inconsistent(format!("ρ_ic = {rho_ic} contradicts the integrality of Q(I) / Q(I∨)"));
    }
    let h = c.minimal_covers().iter().map(|e| e.count_ones()).max().unwrap_or(0);
    let h_dual = c.edges().iter().map(|e| e.count_ones()).max().unwrap_or(0);
    if h >= 2 && h_dual >= 2 && rho_ic >= rat(h.min(h_dual) as i64, 1) {
        return inconsistent(format!("ρ_ic = {rho_ic} reaches min(bight I, bight I∨)"));
    }
    let ceiling = rho_ic.ceil().to_integer().to_u64().ok_or(Error::Overflow("ρ_ic ceiling"))?;
    Ok(ResurgenceReport {
        rho_ic,
        u: vi.vertices[a].clone(),
        v: vd.vertices[b].clone(),
        ceiling,
        q_integral,
        dual_q_integral,
    })
}

fn contained_in_power(sym: &MonomialIdeal, i: &MonomialIdeal, r: u32, budget: &Budget) -> Result<bool> {
    let ir = i.power(r)?;
    budget.charge_points((sym.len() * ir.len()) as u64)?;
    Ok(sym.generators().iter().all(|g| ir.contains(g)))
}

/// Schenzel's f(r) = min{n ≥ 1 : I⁽ⁿ⁾ ⊂ Iʳ}, searched over r ≤ n ≤ r·bight(I).
pub fn containment_function(i: &MonomialIdeal, r: u32, budget: &Budget) -> Result<u32> {
    if r == 0 {
        return precondition("r ≥ 1");
    }
    let mut cache = SymbolicPowerCache::new(i, budget)?;
    let h = cache.big_height() as u32;
    for n in r..=r * h.max(1) {
        let sym = cache.get(n, budget)?.clone();
        if contained_in_power(&sym, i, r, budget)? {
            return Ok(n);
        }
    }
    inconsistent(format!("I^({}) ⊄ I^{r} despite uniform containment", r * h))
}

/// Whether n/r lies in the ic set {n/r : I⁽ⁿ⁾ ⊄ closure(Iʳ)} and in the
/// ordinary set {n/r : I⁽ⁿ⁾ ⊄ Iʳ}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContainmentDiagnostics {
    pub n: u32,
    pub r: u32,
    pub outside_closure: bool,
    pub outside_power: bool,
}

pub fn containment_diagnostics(i: &MonomialIdeal, n: u32, r: u32, budget: &Budget) -> Result<ContainmentDiagnostics> {
    if r == 0 {
        return precondition("r ≥ 1");
    }
    let sym = symbolic_power(i, n, budget)?;
    let np = NewtonPolyhedron::new(i)?;
    let outside_closure = !sym.generators().iter().all(|g| np.contains(g.entries(), r));
    let outside_power = !contained_in_power(&sym, i, r, budget)?;
    if outside_closure && !outside_power {
        return inconsistent("inside Iʳ but outside its closure");
    }
    Ok(ContainmentDiagnostics { n, r, outside_closure, outside_power })
}

/// ρ(I) = 1 iff Q(I) is integral and I⁽ʳ⁺¹⁾ ⊂ Iʳ for r = 1, …, s − 1.
pub fn resurgence_one_test(i: &MonomialIdeal, budget: &Budget) -> Result<bool> {
    if !covering_polyhedron_integral(i)? {
        return Ok(false);
    }
    let mut cache = SymbolicPowerCache::new(i, budget)?;
    for r in 1..i.nvars() as u32 {
        let sym = cache.get(r + 1, budget)?.clone();
        if !contained_in_power(&sym, i, r, budget)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// ⌈ρ_ic⌉, the least h with I⁽ʰⁿ⁾ ⊂ closure(Iⁿ) for all n; verified for n ≤ 4.
pub fn uniform_containment_ceiling(i: &MonomialIdeal, budget: &Budget) -> Result<u32> {
    let h = ic_resurgence(i, budget)?.ceiling as u32;
    let np = NewtonPolyhedron::new(i)?;
    let mut cache = SymbolicPowerCache::new(i, budget)?;
    for n in 1..=4 {
        let sym = cache.get(h * n, budget)?;
        if !sym.generators().iter().all(|g| np.contains(g.entries(), n)) {
            return inconsistent(format!("I^({}) ⊄ closure(I^{n}) with h = ⌈ρ_ic⌉ = {h}", h * n));
        }
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clutter::Graph;

    fn b() -> Budget {
        Budget::default()
    }

    fn edge_ideal(g: &Graph) -> MonomialIdeal {
        g.edge_ideal().unwrap()
    }

    fn q6() -> MonomialIdeal {
        // t1t2t5, t1t3t4, t2t3t6, t4t5t6
        MonomialIdeal::from_rows(&[
            &[1, 1, 0, 0, 1, 0],
            &[1, 0, 1, 1, 0, 0],
            &[0, 1, 1, 0, 0, 1],
            &[0, 0, 0, 1, 1, 1],
        ])
        .unwrap()
    }

    #[test]
    fn symbolic_squares() {
        let c3 = edge_ideal(&Graph::cycle(3));
        let expected = c3.power(2).unwrap().sum(&MonomialIdeal::from_rows(&[&[1, 1, 1]]).unwrap()).unwrap();
        assert_eq!(symbolic_power(&c3, 2, &b()).unwrap(), expected);
        let c4 = edge_ideal(&Graph::cycle(4));
        assert_eq!(symbolic_power(&c4, 2, &b()).unwrap(), c4.power(2).unwrap());
        let q = q6();
        let sym = symbolic_power(&q, 2, &b()).unwrap();
        let sq = q.power(2).unwrap();
        assert!(sym.contains_ideal(&sq) && sym != sq);
    }

    #[test]
    fn simis_examples() {
        assert!(is_simis(&edge_ideal(&Graph::cycle(4)), &b()).unwrap());
        assert!(!is_simis(&edge_ideal(&Graph::cycle(3)), &b()).unwrap());
        assert!(covering_polyhedron_integral(&q6()).unwrap());
        assert!(!is_simis(&q6(), &b()).unwrap());
    }

    #[test]
    fn mfmc_gap_on_triangle() {
        let gap = mfmc_spot_check(&edge_ideal(&Graph::cycle(3)), 1, &b()).unwrap().unwrap();
        assert_eq!(gap.alpha, vec![1, 1, 1]);
        assert_eq!(gap.lp_value, rat(3, 2));
        assert_eq!((gap.integer_packing, gap.integer_cover), (1, 2));
        assert!(mfmc_spot_check(&edge_ideal(&Graph::cycle(6)), 2, &b()).unwrap().is_none());
    }

    #[test]
    fn simis_cone_bases() {
        let c3 = symbolic_rees_generators(&edge_ideal(&Graph::cycle(3)), &b()).unwrap();
        assert!(c3.contains(&(ExponentVector::new(vec![1, 1, 1]).unwrap(), 2)));
        assert_eq!(c3.len(), 3 + 3 + 1);
        let c4 = symbolic_rees_generators(&edge_ideal(&Graph::cycle(4)), &b()).unwrap();
        assert_eq!(c4.len(), 4 + 4);
        assert!(c4.iter().all(|(a, n)| *n <= 1 && a.degree() == 2 * *n as u64 || *n == 0 && a.degree() == 1));
        let prime = MonomialIdeal::from_rows(&[&[1, 0], &[0, 1]]).unwrap();
        assert_eq!(symbolic_rees_generators(&prime, &b()).unwrap().len(), 4);
    }

    #[test]
    fn resurgence_values() {
        let c3 = ic_resurgence(&edge_ideal(&Graph::cycle(3)), &b()).unwrap();
        assert_eq!(c3.rho_ic, rat(4, 3));
        assert_eq!(c3.u, vec![rat(1, 2); 3]);
        assert_eq!(c3.ceiling, 2);
        assert_eq!(ic_resurgence(&edge_ideal(&Graph::cycle(4)), &b()).unwrap().rho_ic, rat(1, 1));
        assert_eq!(ic_resurgence(&q6(), &b()).unwrap().rho_ic, rat(1, 1));
        assert_eq!(uniform_containment_ceiling(&edge_ideal(&Graph::cycle(3)), &b()).unwrap(), 2);
    }

    #[test]
    fn schenzel_function_of_q6() {
        let q = q6();
        let f: Vec<u32> = (1..=4).map(|r| containment_function(&q, r, &b()).unwrap()).collect();
        assert_eq!(f, vec![1, 3, 4, 5]);
        assert!(resurgence_one_test(&q, &b()).unwrap());
        let d = containment_diagnostics(&q, 2, 2, &b()).unwrap();
        assert!(d.outside_power && !d.outside_closure);
    }

    #[test]
    fn containment_for_bipartite_and_triangle() {
        let c4 = edge_ideal(&Graph::cycle(4));
        for r in 1..=3 {
            assert_eq!(containment_function(&c4, r, &b()).unwrap(), r);
        }
        assert!(resurgence_one_test(&c4, &b()).unwrap());
        // t1t2t3 ∈ I⁽²⁾ \ I², and I⁽³⁾ ⊂ I²
        assert_eq!(containment_function(&edge_ideal(&Graph::cycle(3)), 2, &b()).unwrap(), 3);
    }
}
