//! Exact integer and rational helpers shared by all modules.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn rat_int(v: &Int) -> Rat {
    Rat::from_integer(v.clone())
}

/// Serializes as `p/q`, always with an explicit denominator.
pub fn format_rat(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Integers go to JSON as decimal strings so nothing is lost to f64.
pub fn serialize_int<S: serde::Serializer>(v: &Int, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn serialize_ints<S: serde::Serializer>(v: &[Int], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

pub fn serialize_rat<S: serde::Serializer>(v: &Rat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rat(v))
}

pub fn serialize_rats<S: serde::Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(format_rat))
}

pub fn serialize_rat_rows<S: serde::Serializer>(v: &[Vec<Rat>], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|row| row.iter().map(format_rat).collect::<Vec<_>>()))
}

/// Parses `p/q` or a bare integer.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: Int = p.trim().parse().ok()?;
            let q: Int = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rat::new(p, q))
            }
        }
        None => s.parse::<Int>().ok().map(Rat::from_integer),
    }
}

pub fn gcd_all<'a>(values: impl IntoIterator<Item = &'a Int>) -> Int {
    let mut g = Int::zero();
    for v in values {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides by the gcd of the entries; the zero vector is left alone.
pub fn make_primitive(v: &mut [Int]) {
    let g = gcd_all(v.iter());
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

/// Clears denominators with a positive factor and returns a primitive
/// integer vector pointing in the same direction.
pub fn primitive_from_rats(v: &[Rat]) -> Vec<Int> {
    let l = v
        .iter()
        .fold(Int::one(), |acc, x| acc.lcm(x.denom()));
    let mut out: Vec<Int> = v.iter().map(|x| (x * rat_int(&l)).to_integer()).collect();
    make_primitive(&mut out);
    out
}

pub fn dot(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_rat(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_int_u32(a: &[Int], b: &[u32]) -> Int {
    a.iter()
        .zip(b)
        .filter(|(_, y)| **y != 0)
        .map(|(x, y)| x * Int::from(*y))
        .sum()
}

pub fn to_i128(v: &Int) -> Option<i128> {
    v.to_i128()
}

pub fn ceil_rat(r: &Rat) -> Int {
    r.ceil().to_integer()
}

pub fn is_integral(r: &Rat) -> bool {
    r.denom().is_one()
}

pub fn abs(v: &Int) -> Int {
    v.abs()
}

pub fn binomial(n: u64, k: u64) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> Int {
    (1..=n).fold(Int::one(), |acc, i| acc * Int::from(i))
}
