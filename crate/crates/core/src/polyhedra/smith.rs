//! Smith normal form invariants of integer matrices.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::Int;
use crate::error::{precondition, Result};

/// Non-zero invariant factors d_1 | d_2 | ⋯ | d_r (all positive).
pub fn invariant_factors(m: &[Vec<Int>]) -> Vec<Int> {
    let mut a: Vec<Vec<Int>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Smallest non-zero entry in the trailing block becomes the pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero()
                    && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..cols {
                    let v = &q * &a[t][j];
                    a[i][j] -= v;
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let v = &q * &row[t];
                    row[j] -= v;
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Divisibility: fold an offending row into row t and repeat.
            let offending = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match offending {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

pub fn rank(m: &[Vec<Int>]) -> usize {
    invariant_factors(m).len()
}

/// Δ_r(B): gcd of the non-zero r×r minors, i.e. d_1⋯d_r. Returns (Δ_r, rank).
pub fn smith_invariant(b: &[Vec<Int>], r: usize) -> Result<(Int, usize)> {
    if b.iter().all(|row| row.iter().all(|x| x.is_zero())) {
        return precondition("the matrix is zero");
    }
    let d = invariant_factors(b);
    if r > d.len() {
        return precondition(format!("r = {r} exceeds the rank {}", d.len()));
    }
    Ok((d[..r].iter().fold(Int::one(), |acc, x| acc * x), d.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn im(rows: &[&[i64]]) -> Vec<Vec<Int>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn classic_forms() {
        assert_eq!(invariant_factors(&im(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]])), vec![int(2), int(6), int(12)]);
        assert_eq!(invariant_factors(&im(&[&[1, 0], &[0, 1]])), vec![int(1), int(1)]);
        assert_eq!(invariant_factors(&im(&[&[2, 0], &[0, 3]])), vec![int(1), int(6)]);
        assert_eq!(invariant_factors(&im(&[&[0, 0], &[0, 0]])), Vec::<Int>::new());
    }

    #[test]
    fn triangle_incidence_with_ones() {
        // columns (v_i, 1) for the edges of a triangle
        let b = im(&[&[1, 0, 1], &[1, 1, 0], &[0, 1, 1], &[1, 1, 1]]);
        assert_eq!(smith_invariant(&b, 3).unwrap(), (int(1), 3));
        assert!(smith_invariant(&b, 4).is_err());
        assert_eq!(smith_invariant(&im(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), 3).unwrap().0, int(1));
    }
}
