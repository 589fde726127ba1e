//! Integer lattices: unimodular column echelon forms, integer kernels and
//! lattice bases.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{Int, Rat};
use crate::polyhedra::linalg::{independent_subset, integer_inverse, nullspace, transpose};

/// Column-style echelon form: returns (E, U, rank) with m·U = E, U unimodular,
/// and E lower-staircase with positive pivots in columns 0..rank.
pub fn column_echelon(m: &[Vec<Int>], ncols: usize) -> (Vec<Vec<Int>>, Vec<Vec<Int>>, usize) {
    let mut e: Vec<Vec<Int>> = m.to_vec();
    let mut u: Vec<Vec<Int>> = (0..ncols)
        .map(|i| (0..ncols).map(|j| if i == j { Int::one() } else { Int::zero() }).collect())
        .collect();
    let mut c = 0;
    for i in 0..e.len() {
        if c == ncols {
            break;
        }
        for j in c + 1..ncols {
            if e[i][j].is_zero() {
                continue;
            }
            let a = e[i][c].clone();
            let b = e[i][j].clone();
            let eg = a.extended_gcd(&b);
            let (g, x, y) = (eg.gcd, eg.x, eg.y);
            let p = -(&b / &g);
            let q = &a / &g;
            combine_columns(&mut e, c, j, &x, &y, &p, &q);
            combine_columns(&mut u, c, j, &x, &y, &p, &q);
        }
        if !e[i][c].is_zero() {
            if e[i][c].is_negative() {
                negate_column(&mut e, c);
                negate_column(&mut u, c);
            }
            // Reduce entries to the left of the pivot to keep numbers small.
            for k in 0..c {
                let f = e[i][k].div_floor(&e[i][c]);
                if !f.is_zero() {
                    subtract_column(&mut e, k, c, &f);
                    subtract_column(&mut u, k, c, &f);
                }
            }
            c += 1;
        }
    }
    (e, u, c)
}

// (col_c, col_j) <- (x col_c + y col_j, p col_c + q col_j)
fn combine_columns(m: &mut [Vec<Int>], c: usize, j: usize, x: &Int, y: &Int, p: &Int, q: &Int) {
    for row in m.iter_mut() {
        let a = row[c].clone();
        let b = row[j].clone();
        row[c] = x * &a + y * &b;
        row[j] = p * &a + q * &b;
    }
}

fn negate_column(m: &mut [Vec<Int>], c: usize) {
    for row in m.iter_mut() {
        row[c] = -row[c].clone();
    }
}

// col_k <- col_k - f col_c
fn subtract_column(m: &mut [Vec<Int>], k: usize, c: usize, f: &Int) {
    for row in m.iter_mut() {
        let t = f * &row[c];
        row[k] -= t;
    }
}

/// Lattice basis of {x ∈ ℤⁿ : rows·x = 0}.
pub fn integer_kernel(rows: &[Vec<Int>], n: usize) -> Vec<Vec<Int>> {
    let (_, u, r) = column_echelon(rows, n);
    (r..n).map(|j| u.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Basis of the lattice ℤV generated by the vectors.
pub fn lattice_basis(vectors: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let n = vectors[0].len();
    let cols = transpose(vectors);
    let (e, _, r) = column_echelon(&cols, vectors.len());
    (0..r).map(|j| (0..n).map(|i| e[i][j].clone()).collect()).collect()
}

/// Basis of the saturated lattice ℤⁿ ∩ span(V).
pub fn saturation_basis(vectors: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let n = vectors[0].len();
    let k = nullspace(vectors, n);
    if k.is_empty() {
        return (0..n)
            .map(|i| (0..n).map(|j| if i == j { Int::one() } else { Int::zero() }).collect())
            .collect();
    }
    integer_kernel(&k, n)
}

/// Coordinates with respect to a lattice basis B (vectors b_1..b_r in ℤⁿ).
#[derive(Clone, Debug)]
pub struct Coordinates {
    pub basis: Vec<Vec<Int>>,
    rows: Vec<usize>,
    inv: Vec<Vec<Int>>,
    den: Int,
}

impl Coordinates {
    pub fn new(basis: Vec<Vec<Int>>) -> Self {
        let bt = transpose(&basis); // n × r
        let rows = independent_subset(&bt);
        let square: Vec<Vec<Int>> = rows.iter().map(|&i| bt[i].clone()).collect();
        let (inv, den) = integer_inverse(&square).expect("basis vectors are independent");
        Coordinates { basis, rows, inv, den }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Integer coordinates of x, or None when x is not in the lattice.
    pub fn coords(&self, x: &[Int]) -> Option<Vec<Int>> {
        let xr: Vec<&Int> = self.rows.iter().map(|&i| &x[i]).collect();
        let mut c = Vec::with_capacity(self.rank());
        for row in &self.inv {
            let num: Int = row.iter().zip(&xr).map(|(a, b)| a * *b).sum();
            if !(&num % &self.den).is_zero() {
                return None;
            }
            c.push(num / &self.den);
        }
        (self.lift(&c).as_slice() == x).then_some(c)
    }

    pub fn lift(&self, c: &[Int]) -> Vec<Int> {
        let n = self.basis[0].len();
        let mut x = vec![Int::zero(); n];
        for (ci, b) in c.iter().zip(&self.basis) {
            if ci.is_zero() {
                continue;
            }
            for (xi, bi) in x.iter_mut().zip(b) {
                *xi += ci * bi;
            }
        }
        x
    }

    /// Pulls a linear form on coordinates back to ℚⁿ (valid on the span).
    pub fn pullback(&self, f: &[Int]) -> Vec<Rat> {
        let n = self.basis[0].len();
        let mut out = vec![Rat::zero(); n];
        for (k, &i) in self.rows.iter().enumerate() {
            let num: Int = f.iter().zip(&self.inv).map(|(fj, row)| fj * &row[k]).sum();
            out[i] = Rat::new(num, self.den.clone());
        }
        out
    }
}
