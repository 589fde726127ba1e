//! Double description: extreme rays of {x : rows·x ≥ 0}.

use num_traits::{Signed, Zero};

use crate::arith::{dot, make_primitive, Int};
use crate::error::{precondition, Result};
use crate::polyhedra::linalg::{independent_subset, integer_inverse};

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64).max(1)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn contains(&self, o: &Bits) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & b == *b)
    }
}

struct Ray {
    v: Vec<Int>,
    zeros: Bits,
}

/// Primitive extreme rays of the pointed cone {x ∈ ℚ^dim : r·x ≥ 0 for r in rows},
/// sorted lexicographically. Fails when the rows do not have full rank.
pub fn extreme_rays(rows: &[Vec<Int>], dim: usize) -> Result<Vec<Vec<Int>>> {
    let basis = independent_subset(rows);
    if basis.len() < dim || dim == 0 {
        return precondition("cone is not pointed");
    }
    let square: Vec<Vec<Int>> = basis.iter().map(|&i| rows[i].clone()).collect();
    let (inv, _) = integer_inverse(&square).expect("independent rows");
    let nrows = rows.len();
    let mut rays: Vec<Ray> = (0..dim)
        .map(|j| {
            let mut v: Vec<Int> = inv.iter().map(|r| r[j].clone()).collect();
            make_primitive(&mut v);
            let mut zeros = Bits::new(nrows);
            for (k, &bi) in basis.iter().enumerate() {
                if k != j {
                    zeros.set(bi);
                }
            }
            Ray { v, zeros }
        })
        .collect();

    let mut in_basis = vec![false; nrows];
    for &b in &basis {
        in_basis[b] = true;
    }
    for (idx, row) in rows.iter().enumerate() {
        if in_basis[idx] {
            continue;
        }
        let vals: Vec<Int> = rays.iter().map(|r| dot(row, &r.v)).collect();
        if vals.iter().all(|v| !v.is_negative()) {
            for (r, v) in rays.iter_mut().zip(&vals) {
                if v.is_zero() {
                    r.zeros.set(idx);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        let mut fresh = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = rays[p].zeros.and(&rays[n].zeros);
                if dim >= 2 && common.count() < dim - 2 {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(k, r)| k == p || k == n || !r.zeros.contains(&common));
                if !adjacent {
                    continue;
                }
                let mut v: Vec<Int> = rays[n]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(xn, xp)| &vals[p] * xn - &vals[n] * xp)
                    .collect();
                make_primitive(&mut v);
                let mut zeros = common;
                zeros.set(idx);
                fresh.push(Ray { v, zeros });
            }
        }
        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
        for (r, v) in rays.into_iter().zip(&vals) {
            if v.is_positive() {
                next.push(r);
            } else if v.is_zero() {
                let mut r = r;
                r.zeros.set(idx);
                next.push(r);
            }
        }
        next.extend(fresh);
        rays = next;
    }
    let mut out: Vec<Vec<Int>> = rays.into_iter().map(|r| r.v).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn im(rows: &[&[i64]]) -> Vec<Vec<Int>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn orthant() {
        let rays = extreme_rays(&im(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), 3).unwrap();
        assert_eq!(rays, im(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]));
    }

    #[test]
    fn cone_over_square() {
        // x ≥ 0, y ≥ 0, z − x ≥ 0, z − y ≥ 0: cone over the unit square.
        let rays = extreme_rays(&im(&[&[1, 0, 0], &[0, 1, 0], &[-1, 0, 1], &[0, -1, 1]]), 3).unwrap();
        assert_eq!(rays, im(&[&[0, 0, 1], &[0, 1, 1], &[1, 0, 1], &[1, 1, 1]]));
    }

    #[test]
    fn redundant_rows_and_non_pointed() {
        let rays = extreme_rays(&im(&[&[1, 0], &[0, 1], &[1, 1], &[2, 1]]), 2).unwrap();
        assert_eq!(rays, im(&[&[0, 1], &[1, 0]]));
        assert!(extreme_rays(&im(&[&[1, 0]]), 2).is_err());
    }
}
