//! Finite fields with at most nine elements.
//!
//! An element of GF(p^e) is stored as the integer Σ c_i p^i whose base-p
//! digits are the coefficients of a polynomial in a root of the modulus below.
//! Multiplication goes through log/antilog tables built once per field.

use crate::error::{precondition, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisField {
    q: u8,
    p: u8,
    add: Vec<u8>,
    neg: Vec<u8>,
    log: Vec<u8>,
    exp: Vec<u8>,
}

/// Monic irreducible modulus, lowest coefficient first, without the leading 1.
fn modulus(q: u8) -> Option<(u8, &'static [u8])> {
    match q {
        2 | 3 | 5 | 7 => Some((q, &[])),
        4 => Some((2, &[1, 1])),    // x² + x + 1
        8 => Some((2, &[1, 1, 0])), // x³ + x + 1
        9 => Some((3, &[1, 0])),    // x² + 1
        _ => None,
    }
}

fn digits(mut v: u8, p: u8, e: usize) -> Vec<u8> {
    let mut d = vec![0; e];
    for x in d.iter_mut() {
        *x = v % p;
        v /= p;
    }
    d
}

fn undigits(d: &[u8], p: u8) -> u8 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// Schoolbook product modulo the irreducible polynomial.
fn slow_mul(a: u8, b: u8, p: u8, tail: &[u8]) -> u8 {
    let e = tail.len().max(1);
    if tail.is_empty() {
        return ((a as u16 * b as u16) % p as u16) as u8;
    }
    let (da, db) = (digits(a, p, e), digits(b, p, e));
    let mut prod = vec![0u16; 2 * e - 1];
    for i in 0..e {
        for j in 0..e {
            prod[i + j] = (prod[i + j] + da[i] as u16 * db[j] as u16) % p as u16;
        }
    }
    // x^e = -tail(x)
    for k in (e..prod.len()).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        prod[k] = 0;
        for (i, &t) in tail.iter().enumerate() {
            let sub = c * t as u16 % p as u16;
            prod[k - e + i] = (prod[k - e + i] + p as u16 - sub) % p as u16;
        }
    }
    let out: Vec<u8> = prod[..e].iter().map(|&x| x as u8).collect();
    undigits(&out, p)
}

impl GaloisField {
    /// Accepts q ∈ {2, 3, 4, 5, 7, 8, 9}.
    pub fn new(q: u8) -> Result<Self> {
        let (p, tail) = match modulus(q) {
            Some(m) => m,
            None => return precondition(format!("q = {q} is not a prime power up to 9")),
        };
        let e = tail.len().max(1);
        let qs = q as usize;
        let mut add = vec![0u8; qs * qs];
        let mut neg = vec![0u8; qs];
        for a in 0..q {
            let da = digits(a, p, e);
            for b in 0..q {
                let db = digits(b, p, e);
                let sum: Vec<u8> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a as usize * qs + b as usize] = undigits(&sum, p);
            }
            let n: Vec<u8> = da.iter().map(|x| (p - x) % p).collect();
            neg[a as usize] = undigits(&n, p);
        }
        // Smallest generator of the multiplicative group.
        let order = q - 1;
        let mut exp = Vec::new();
        for g in 1..q {
            let mut pw = vec![1u8];
            let mut x = 1u8;
            for _ in 1..order {
                x = slow_mul(x, g, p, tail);
                if x == 1 {
                    break;
                }
                pw.push(x);
            }
            if pw.len() == order as usize {
                exp = pw;
                break;
            }
        }
        let mut log = vec![0u8; qs];
        for (k, &x) in exp.iter().enumerate() {
            log[x as usize] = k as u8;
        }
        Ok(GaloisField { q, p, add, neg, log, exp })
    }

    pub fn order(&self) -> u8 {
        self.q
    }

    pub fn characteristic(&self) -> u8 {
        self.p
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.exp.len();
        self.exp[(self.log[a as usize] as usize + self.log[b as usize] as usize) % n]
    }

    /// Multiplicative inverse; panics on zero, which callers never pass.
    pub fn inv(&self, a: u8) -> u8 {
        assert!(a != 0, "zero has no inverse");
        let n = self.exp.len();
        self.exp[(n - self.log[a as usize] as usize) % n]
    }

    pub fn pow(&self, a: u8, k: u32) -> u8 {
        if k == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = self.exp.len() as u64;
        self.exp[((self.log[a as usize] as u64 * k as u64) % n) as usize]
    }

    /// Row-reduces `rows` in place and returns the rank; pivot rows come first
    /// with leading entry 1.
    pub fn row_reduce(&self, rows: &mut Vec<Vec<u8>>) -> usize {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for c in 0..cols {
            let Some(piv) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(rank, piv);
            let inv = self.inv(rows[rank][c]);
            for x in rows[rank].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for i in 0..rows.len() {
                if i != rank && rows[i][c] != 0 {
                    let f = rows[i][c];
                    for j in 0..cols {
                        let t = self.mul(f, rows[rank][j]);
                        rows[i][j] = self.sub(rows[i][j], t);
                    }
                }
            }
            rank += 1;
        }
        rows.truncate(rank);
        rank
    }

    pub fn rank(&self, rows: &[Vec<u8>]) -> usize {
        let mut r = rows.to_vec();
        self.row_reduce(&mut r)
    }
}
