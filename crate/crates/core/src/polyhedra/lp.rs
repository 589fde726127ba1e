//! Exact two-phase simplex with Bland's rule.

use num_traits::{One, Signed, Zero};

use crate::arith::{dot_rat, Rat};
use crate::error::{inconsistent, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    /// max 1·y subject to A y ≤ α, y ≥ 0.
    Max,
    /// min α·x subject to x A ≥ 1, x ≥ 0.
    Min,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    pub value: Rat,
    /// Optimal point of the program that was asked for.
    pub witness: Vec<Rat>,
    /// Optimal point of its dual.
    pub dual: Vec<Rat>,
}

struct Tableau {
    rows: Vec<Vec<Rat>>, // coefficients followed by the right-hand side
    cost: Vec<Rat>,
    z0: Rat,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rat {
        &self.rows[i][self.ncols]
    }

    fn pivot(&mut self, r: usize, j: usize) {
        let inv = self.rows[r][j].recip();
        for x in self.rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[j].is_zero() {
                continue;
            }
            let f = row[j].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        if !self.cost[j].is_zero() {
            let f = self.cost[j].clone();
            for (x, p) in self.cost.iter_mut().zip(&pivot_row[..self.ncols]) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
            self.z0 += &f * &pivot_row[self.ncols];
        }
        self.basis[r] = j;
    }

    /// Bland's rule: lowest-index entering column, lowest-index leaving basic.
    fn optimize(&mut self) -> Result<()> {
        loop {
            let Some(j) = (0..self.ncols).find(|&j| self.cost[j].is_positive()) else {
                return Ok(());
            };
            let mut best: Option<(usize, Rat)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][j];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let Some((r, _)) = best else {
                return Err(Error::Unbounded);
            };
            self.pivot(r, j);
        }
    }
}

/// Maximizes c·x subject to a·x ≤ b and x ≥ 0; the dual (min b·y, aᵀy ≥ c,
/// y ≥ 0) is read off the final tableau and strong duality is verified.
pub fn maximize(a: &[Vec<Rat>], b: &[Rat], c: &[Rat]) -> Result<LpSolution> {
    let m = a.len();
    let n = c.len();
    let needs_phase_one = b.iter().any(|x| x.is_negative());
    let ncols = n + m + usize::from(needs_phase_one);
    let mut rows = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = Vec::with_capacity(ncols + 1);
        row.extend(a[i].iter().cloned());
        row.extend((0..m).map(|k| if k == i { Rat::one() } else { Rat::zero() }));
        if needs_phase_one {
            row.push(-Rat::one());
        }
        row.push(b[i].clone());
        rows.push(row);
    }
    let mut t = Tableau {
        rows,
        cost: vec![Rat::zero(); ncols],
        z0: Rat::zero(),
        basis: (n..n + m).collect(),
        ncols,
    };

    if needs_phase_one {
        let art = n + m;
        t.cost[art] = -Rat::one();
        let mut r = 0;
        for i in 1..m {
            if b[i] < b[r] {
                r = i;
            }
        }
        t.pivot(r, art);
        t.optimize()?;
        if t.z0.is_negative() {
            return Err(Error::Infeasible);
        }
        if let Some(r) = t.basis.iter().position(|&v| v == art) {
            match (0..art).find(|&k| !t.rows[r][k].is_zero()) {
                Some(k) => t.pivot(r, k),
                None => {
                    t.rows.remove(r);
                    t.basis.remove(r);
                }
            }
        }
        for row in t.rows.iter_mut() {
            row.remove(art);
        }
        t.ncols -= 1;
        t.cost.truncate(t.ncols);
    }

    t.cost = (0..t.ncols)
        .map(|j| if j < n { c[j].clone() } else { Rat::zero() })
        .collect();
    t.z0 = Rat::zero();
    for r in 0..t.rows.len() {
        let bv = t.basis[r];
        if !t.cost[bv].is_zero() {
            let f = t.cost[bv].clone();
            for k in 0..t.ncols {
                let v = &f * &t.rows[r][k];
                t.cost[k] -= v;
            }
            t.z0 += &f * t.rhs(r);
        }
    }
    t.optimize()?;

    let mut x = vec![Rat::zero(); n];
    for (r, &bv) in t.basis.iter().enumerate() {
        if bv < n {
            x[bv] = t.rhs(r).clone();
        }
    }
    let y: Vec<Rat> = (0..m).map(|i| -t.cost[n + i].clone()).collect();
    verify(a, b, c, &x, &y, &t.z0)?;
    Ok(LpSolution { value: t.z0, witness: x, dual: y })
}

fn verify(a: &[Vec<Rat>], b: &[Rat], c: &[Rat], x: &[Rat], y: &[Rat], value: &Rat) -> Result<()> {
    let primal_ok = x.iter().all(|v| !v.is_negative())
        && a.iter().zip(b).all(|(row, bi)| dot_rat(row, x) <= *bi);
    let dual_ok = y.iter().all(|v| !v.is_negative())
        && (0..c.len()).all(|j| {
            let s: Rat = a.iter().zip(y).map(|(row, yi)| &row[j] * yi).sum();
            s >= c[j]
        });
    if !primal_ok || !dual_ok {
        return inconsistent("simplex produced an infeasible primal or dual point");
    }
    if dot_rat(c, x) != *value || dot_rat(b, y) != *value {
        return inconsistent("strong duality check failed");
    }
    Ok(())
}

/// The two programs attached to a non-negative matrix A (rows = variables).
pub fn lp_optimize(a: &[Vec<Rat>], alpha: &[Rat], sense: Sense) -> Result<LpSolution> {
    let s = a.len();
    let m = a.first().map_or(0, |r| r.len());
    match sense {
        Sense::Max => maximize(a, alpha, &vec![Rat::one(); m]),
        Sense::Min => {
            let at: Vec<Vec<Rat>> = (0..m).map(|j| (0..s).map(|i| -a[i][j].clone()).collect()).collect();
            let neg_alpha: Vec<Rat> = alpha.iter().map(|v| -v.clone()).collect();
            let sol = maximize(&at, &vec![-Rat::one(); m], &neg_alpha)?;
            Ok(LpSolution { value: -sol.value, witness: sol.witness, dual: sol.dual })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn rm(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect()
    }

    #[test]
    fn box_program() {
        let s = lp_optimize(&rm(&[&[1, 0], &[0, 1]]), &[rat(3, 1), rat(2, 1)], Sense::Max).unwrap();
        assert_eq!(s.value, rat(5, 1));
    }

    #[test]
    fn pure_squares_half_witness() {
        let s = lp_optimize(&rm(&[&[2, 0], &[0, 2]]), &[rat(1, 1), rat(1, 1)], Sense::Max).unwrap();
        assert_eq!(s.value, rat(1, 1));
        assert_eq!(s.witness, vec![rat(1, 2), rat(1, 2)]);
    }

    #[test]
    fn triangle_fractional_matching_and_cover() {
        let a = rm(&[&[1, 0, 1], &[1, 1, 0], &[0, 1, 1]]);
        let one = [rat(1, 1), rat(1, 1), rat(1, 1)];
        let p = lp_optimize(&a, &one, Sense::Max).unwrap();
        assert_eq!(p.value, rat(3, 2));
        let d = lp_optimize(&a, &one, Sense::Min).unwrap();
        assert_eq!(d.value, rat(3, 2));
        assert_eq!(d.witness, vec![rat(1, 2); 3]);
    }

    #[test]
    fn phase_one_detects_infeasibility_and_unboundedness() {
        // x ≤ -1 with x ≥ 0
        assert_eq!(maximize(&rm(&[&[1]]), &[rat(-1, 1)], &[rat(1, 1)]), Err(Error::Infeasible));
        // max x with -x ≤ 0
        assert_eq!(maximize(&rm(&[&[-1]]), &[rat(0, 1)], &[rat(1, 1)]), Err(Error::Unbounded));
        // min x1 + x2 with x1 + x2 ≥ 2 and x1 ≥ 1/2
        let s = maximize(&rm(&[&[-1, -1], &[-1, 0]]), &[rat(-2, 1), rat(-1, 2)], &[rat(-1, 1), rat(-1, 1)]).unwrap();
        assert_eq!(s.value, rat(-2, 1));
    }

    #[test]
    fn degenerate_program_terminates() {
        // Klee–Minty-like degenerate cube corner
        let a = rm(&[&[1, 0, 0], &[20, 1, 0], &[200, 20, 1], &[1, 1, 1]]);
        let b = [rat(1, 1), rat(100, 1), rat(10000, 1), rat(0, 1)];
        let s = maximize(&a, &b, &[rat(100, 1), rat(10, 1), rat(1, 1)]).unwrap();
        assert_eq!(s.value, rat(0, 1));
    }
}
