//! Dense exact linear algebra over ℚ and ℤ.

use num_traits::{One, Signed, Zero};

use crate::arith::{make_primitive, primitive_from_rats, rat_int, Int, Rat};

pub fn to_rat_rows(rows: &[Vec<Int>]) -> Vec<Vec<Rat>> {
    rows.iter().map(|r| r.iter().map(rat_int).collect()).collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Rat>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for k in 0..m[i].len() {
                    let t = &f * &m[row][k];
                    m[i][k] -= t;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Int>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let n = rows[0].len();
    let mut m = to_rat_rows(rows);
    rref(&mut m, n).len()
}

/// Indices of a maximal linearly independent subfamily, chosen greedily in order.
pub fn independent_subset(rows: &[Vec<Int>]) -> Vec<usize> {
    let mut chosen = Vec::new();
    let mut basis: Vec<(usize, Vec<Rat>)> = Vec::new();
    for (idx, r) in rows.iter().enumerate() {
        let mut v: Vec<Rat> = r.iter().map(rat_int).collect();
        for (p, b) in &basis {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for k in 0..v.len() {
                    let t = &f * &b[k];
                    v[k] -= t;
                }
            }
        }
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            let inv = v[p].recip();
            for x in v.iter_mut() {
                *x *= &inv;
            }
            for (_, b) in basis.iter_mut() {
                if !b[p].is_zero() {
                    let f = b[p].clone();
                    for k in 0..b.len() {
                        let t = &f * &v[k];
                        b[k] -= t;
                    }
                }
            }
            basis.push((p, v));
            chosen.push(idx);
        }
    }
    chosen
}

/// Primitive integer basis of the rational kernel {x : rows·x = 0}.
pub fn nullspace(rows: &[Vec<Int>], ncols: usize) -> Vec<Vec<Int>> {
    let mut m = to_rat_rows(rows);
    let pivots = rref(&mut m, ncols);
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rat::zero(); ncols];
        v[free] = Rat::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -m[i][free].clone();
        }
        out.push(primitive_from_rats(&v));
    }
    out
}

/// Some solution of a·x = b, free variables set to zero.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let ncols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut row = r.clone();
            row.push(v.clone());
            row
        })
        .collect();
    let pivots = rref(&mut m, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Rat::zero(); ncols];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = m[i][ncols].clone();
    }
    Some(x)
}

/// Fraction-free (Bareiss) determinant.
pub fn determinant(m: &[Vec<Int>]) -> Int {
    let n = m.len();
    if n == 0 {
        return Int::one();
    }
    let mut a: Vec<Vec<Int>> = m.to_vec();
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Int::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Inverse of a square non-singular integer matrix, over ℚ.
pub fn inverse(m: &[Vec<Int>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<Rat> = r.iter().map(rat_int).collect();
            row.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            row
        })
        .collect();
    let pivots = rref(&mut aug, n);
    if pivots.len() < n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Adjugate-style inverse: returns (M, D) with D > 0 and m⁻¹ = M / D.
pub fn integer_inverse(m: &[Vec<Int>]) -> Option<(Vec<Vec<Int>>, Int)> {
    let inv = inverse(m)?;
    let d = determinant(m).abs();
    let out = inv
        .iter()
        .map(|r| r.iter().map(|x| (x * rat_int(&d)).to_integer()).collect())
        .collect();
    Some((out, d))
}

/// Primitive normal of the hyperplane spanned by `rows` (rank n−1 in ℚⁿ).
pub fn hyperplane_normal(rows: &[Vec<Int>], n: usize) -> Option<Vec<Int>> {
    let ns = nullspace(rows, n);
    if ns.len() != 1 {
        return None;
    }
    let mut v = ns.into_iter().next().unwrap();
    make_primitive(&mut v);
    Some(v)
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|r| r[j].clone()).collect())
        .collect()
}
