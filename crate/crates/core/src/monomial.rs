//! Exponent vectors and monomial ideals given by minimal generators.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{precondition, Error, Result};

/// The monomial t^a, stored as its exponent vector a.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return precondition("exponent vectors need at least one variable");
        }
        Ok(ExponentVector(entries))
    }

    pub fn zero(s: usize) -> Self {
        ExponentVector(vec![0; s])
    }

    pub fn unit(s: usize, i: usize) -> Self {
        let mut v = vec![0; s];
        v[i] = 1;
        ExponentVector(v)
    }

    /// Characteristic vector of a vertex set given as a bit mask.
    pub fn from_mask(s: usize, mask: u64) -> Self {
        ExponentVector((0..s).map(|i| ((mask >> i) & 1) as u32).collect())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&x| x <= 1)
    }

    /// Support as a bit mask; only meaningful for s ≤ 64.
    pub fn support_mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &x)| x > 0)
            .fold(0u64, |m, (i, _)| m | (1u64 << i))
    }

    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_add(&self, other: &ExponentVector) -> Result<ExponentVector> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_add(*b).ok_or(Error::Overflow("exponent addition"))?);
        }
        Ok(ExponentVector(out))
    }

    pub fn checked_scale(&self, k: u32) -> Result<ExponentVector> {
        let mut out = Vec::with_capacity(self.0.len());
        for a in &self.0 {
            out.push(a.checked_mul(k).ok_or(Error::Overflow("exponent scaling"))?);
        }
        Ok(ExponentVector(out))
    }

    /// Componentwise max(self - other, 0): the generator of (t^self) : t^other.
    pub fn saturating_sub(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// Drops the coordinates in `ones` (substitution t_i -> 1).
    pub fn with_zeroed(&self, ones: u64) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .enumerate()
                .map(|(i, &x)| if (ones >> i) & 1 == 1 { 0 } else { x })
                .collect(),
        )
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl From<ExponentVector> for Vec<u32> {
    fn from(v: ExponentVector) -> Vec<u32> {
        v.0
    }
}

/// Outcome of an operation that may leave the world of proper ideals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reduced {
    Proper(MonomialIdeal),
    /// Some generator became 1.
    Unit,
    /// Every generator vanished.
    Zero,
}

impl Reduced {
    pub fn proper(self) -> Option<MonomialIdeal> {
        match self {
            Reduced::Proper(i) => Some(i),
            _ => None,
        }
    }
}

/// A proper non-zero monomial ideal held by its minimal generators,
/// sorted lexicographically with the largest exponent of t_1 first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    s: usize,
    gens: Vec<ExponentVector>,
}

fn canonical_cmp(a: &ExponentVector, b: &ExponentVector) -> Ordering {
    b.cmp(a)
}

/// Keeps the divisibility-minimal elements; the result is sorted canonically.
fn minimalize(mut gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| canonical_cmp(a, b)));
    gens.dedup();
    let mut kept: Vec<ExponentVector> = Vec::new();
    let mut lower = 0;
    let mut i = 0;
    while i < gens.len() {
        let deg = gens[i].degree();
        let mut j = i;
        while j < gens.len() && gens[j].degree() == deg {
            j += 1;
        }
        // A proper divisor has strictly smaller degree.
        for g in &gens[i..j] {
            if !kept[..lower].iter().any(|k| k.divides(g)) {
                kept.push(g.clone());
            }
        }
        lower = kept.len();
        i = j;
    }
    kept.sort_by(canonical_cmp);
    kept
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, discarding redundant generators.
    pub fn new(gens: Vec<ExponentVector>) -> Result<Self> {
        let s = match gens.first() {
            None => return Err(Error::EmptyInput),
            Some(g) => g.len(),
        };
        if s == 0 {
            return precondition("exponent vectors need at least one variable");
        }
        for g in &gens {
            if g.len() != s {
                return Err(Error::LengthMismatch { expected: s, found: g.len() });
            }
            if g.is_zero() {
                return precondition("a generator equal to 1 gives the unit ideal");
            }
        }
        Ok(MonomialIdeal { s, gens: minimalize(gens) })
    }

    pub fn from_rows(rows: &[&[u32]]) -> Result<Self> {
        let gens = rows
            .iter()
            .map(|r| ExponentVector::new(r.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(gens)
    }

    fn wrap(s: usize, gens: Vec<ExponentVector>) -> Reduced {
        if gens.is_empty() {
            Reduced::Zero
        } else if gens.iter().any(|g| g.is_zero()) {
            Reduced::Unit
        } else {
            Reduced::Proper(MonomialIdeal { s, gens: minimalize(gens) })
        }
    }

    pub fn nvars(&self) -> usize {
        self.s
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    /// Rows indexed by variables, columns by generators.
    pub fn incidence_matrix(&self) -> Vec<Vec<u32>> {
        (0..self.s)
            .map(|i| self.gens.iter().map(|g| g.entries()[i]).collect())
            .collect()
    }

    pub fn max_exponents(&self) -> Vec<u32> {
        (0..self.s)
            .map(|i| self.gens.iter().map(|g| g.entries()[i]).max().unwrap_or(0))
            .collect()
    }

    /// Whether every generator has the same total degree.
    pub fn uniform_degree(&self) -> Option<u64> {
        let d = self.gens[0].degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    /// Exponent of the pure power of each variable, if all are present.
    pub fn pure_powers(&self) -> Option<Vec<u32>> {
        let mut out = vec![0u32; self.s];
        for g in &self.gens {
            let nz: Vec<usize> = (0..self.s).filter(|&i| g.entries()[i] > 0).collect();
            if nz.len() == 1 {
                out[nz[0]] = g.entries()[nz[0]];
            }
        }
        out.iter().all(|&a| a > 0).then_some(out)
    }

    pub fn is_zero_dimensional(&self) -> bool {
        self.pure_powers().is_some()
    }

    pub fn contains(&self, a: &ExponentVector) -> bool {
        self.gens.iter().any(|g| g.divides(a))
    }

    /// Whether `other` ⊆ `self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    fn check_shape(&self, other_len: usize) -> Result<()> {
        if other_len != self.s {
            return Err(Error::LengthMismatch { expected: self.s, found: other_len });
        }
        Ok(())
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_shape(other.s)?;
        let mut out = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                out.push(a.checked_add(b)?);
            }
        }
        Ok(MonomialIdeal { s: self.s, gens: minimalize(out) })
    }

    pub fn power(&self, n: u32) -> Result<MonomialIdeal> {
        if n == 0 {
            return precondition("the zeroth power is the unit ideal");
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_shape(other.s)?;
        let mut out = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                out.push(a.lcm(b));
            }
        }
        Ok(MonomialIdeal { s: self.s, gens: minimalize(out) })
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_shape(other.s)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(MonomialIdeal { s: self.s, gens: minimalize(gens) })
    }

    /// The colon ideal (I : t^a); the unit sentinel when t^a ∈ I.
    pub fn colon(&self, a: &ExponentVector) -> Result<Reduced> {
        self.check_shape(a.len())?;
        Ok(Self::wrap(
            self.s,
            self.gens.iter().map(|g| g.saturating_sub(a)).collect(),
        ))
    }

    /// Substitutes t_i -> 0 for i in `zeros` and t_i -> 1 for i in `ones`.
    pub fn minor_masks(&self, zeros: u64, ones: u64) -> Reduced {
        let gens: Vec<ExponentVector> = self
            .gens
            .iter()
            .filter(|g| g.support_mask() & zeros == 0)
            .map(|g| g.with_zeroed(ones))
            .collect();
        Self::wrap(self.s, gens)
    }

    /// Minor for an assignment list of (variable index, value in {0,1}).
    pub fn minor(&self, assignment: &[(usize, u8)]) -> Result<Reduced> {
        if self.s > 64 {
            return precondition("minors support at most 64 variables");
        }
        let (mut zeros, mut ones) = (0u64, 0u64);
        for &(i, v) in assignment {
            if i >= self.s {
                return precondition(format!("variable index {i} out of range"));
            }
            match v {
                0 => zeros |= 1 << i,
                1 => ones |= 1 << i,
                _ => return precondition("assignments take the values 0 or 1"),
            }
        }
        if zeros & ones != 0 {
            return precondition("a variable was assigned both 0 and 1");
        }
        Ok(self.minor_masks(zeros, ones))
    }

    /// The ideal of covers: one generator per minimal vertex cover.
    pub fn alexander_dual(&self) -> Result<MonomialIdeal> {
        let c = crate::clutter::Clutter::from_ideal(self)?;
        Ok(c.blocker().to_ideal())
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for g in &self.gens {
            out.push_str(&g.to_string());
            out.push('\n');
        }
        out
    }

    /// Groups generators by total degree (used by reports).
    pub fn degree_profile(&self) -> BTreeMap<u64, usize> {
        let mut m = BTreeMap::new();
        for g in &self.gens {
            *m.entry(g.degree()).or_insert(0) += 1;
        }
        m
    }
}

/// Canonical minimization of an arbitrary generator family.
pub fn minimal_generating_set(gens: Vec<ExponentVector>) -> Result<MonomialIdeal> {
    MonomialIdeal::new(gens)
}

pub fn ideal_power(i: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
    i.power(n)
}

pub fn colon_monomial(i: &MonomialIdeal, a: &ExponentVector) -> Result<Reduced> {
    i.colon(a)
}

/// All exponent vectors of total degree `n` supported on the variables of `mask`.
pub fn monomials_of_degree(s: usize, mask: u64, n: u32) -> Vec<ExponentVector> {
    let vars: Vec<usize> = (0..s).filter(|i| (mask >> i) & 1 == 1).collect();
    let mut out = Vec::new();
    let mut cur = vec![0u32; s];
    fn rec(vars: &[usize], k: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if k + 1 == vars.len() {
            cur[vars[k]] = left;
            out.push(ExponentVector(cur.clone()));
            cur[vars[k]] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[vars[k]] = e;
            rec(vars, k + 1, left - e, cur, out);
        }
        cur[vars[k]] = 0;
    }
    if vars.is_empty() {
        if n == 0 {
            out.push(ExponentVector(cur));
        }
        return out;
    }
    rec(&vars, 0, n, &mut cur, &mut out);
    out
}
