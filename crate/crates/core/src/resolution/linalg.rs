//! Exact ranks of sparse integer matrices over the rationals or a prime field.
//!
//! Matrices are given as lists of sparse vectors `(index, value)` sorted by
//! index. Rational rank uses fraction-free elimination in `i64` with content
//! normalization and restarts in arbitrary precision if an entry overflows.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::FieldChar;

pub type SparseVec = Vec<(usize, i64)>;

pub fn rank(vectors: &[SparseVec], field: FieldChar) -> usize {
    match field {
        FieldChar::Rational => rank_fraction_free::<i64>(vectors)
            .unwrap_or_else(|| rank_fraction_free::<BigInt>(vectors).expect("arbitrary precision cannot overflow")),
        FieldChar::Prime(p) => rank_mod_p(vectors, u64::from(p)),
    }
}

trait Coeff: Clone + PartialEq + Sized {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// `a*x - b*y`, or `None` on overflow.
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn is_unit_or_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Option<Self>;
}

impl Coeff for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit_or_zero(&self) -> bool {
        self.abs() <= 1
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
}

impl Coeff for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit_or_zero(&self) -> bool {
        self.abs() <= BigInt::one()
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
}

/// Divides out the content and makes the leading entry positive.
fn normalize<T: Coeff>(v: &mut [(usize, T)]) -> Option<()> {
    let Some(first) = v.first() else {
        return Some(());
    };
    let mut g = first.1.clone();
    for (_, x) in v.iter().skip(1) {
        if g.is_unit_or_zero() {
            break;
        }
        g = g.gcd(x);
    }
    let flip = first.1.is_negative();
    if !g.is_unit_or_zero() {
        for (_, x) in v.iter_mut() {
            *x = x.div_exact(&g);
        }
    }
    if flip {
        for (_, x) in v.iter_mut() {
            *x = x.neg()?;
        }
    }
    Some(())
}

/// `a*row - b*pivot`, dropping zeros.
fn combine<T: Coeff>(a: &T, row: &[(usize, T)], b: &T, pivot: &[(usize, T)]) -> Option<Vec<(usize, T)>> {
    let zero = T::from_i64(0);
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_piv = i == row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        let (idx, val) = if take_row {
            let r = (row[i].0, T::mul_sub(a, &row[i].1, &zero, &zero)?);
            i += 1;
            r
        } else if take_piv {
            let r = (pivot[j].0, T::mul_sub(&zero, &zero, b, &pivot[j].1)?);
            j += 1;
            r
        } else {
            let r = (row[i].0, T::mul_sub(a, &row[i].1, b, &pivot[j].1)?);
            i += 1;
            j += 1;
            r
        };
        if !val.is_zero() {
            out.push((idx, val));
        }
    }
    Some(out)
}

fn rank_fraction_free<T: Coeff>(vectors: &[SparseVec]) -> Option<usize> {
    let mut pivots: HashMap<usize, Vec<(usize, T)>> = HashMap::new();
    for v in vectors {
        let mut row: Vec<(usize, T)> = v
            .iter()
            .filter(|(_, x)| *x != 0)
            .map(|&(i, x)| (i, T::from_i64(x)))
            .collect();
        normalize(&mut row)?;
        while let Some((lead, lead_val)) = row.first().cloned() {
            match pivots.get(&lead) {
                Some(p) => {
                    let g = lead_val.gcd(&p[0].1);
                    let a = p[0].1.div_exact(&g);
                    let b = lead_val.div_exact(&g);
                    row = combine(&a, &row, &b, p)?;
                    normalize(&mut row)?;
                }
                None => {
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    Some(pivots.len())
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn rank_mod_p(vectors: &[SparseVec], p: u64) -> usize {
    let reduce = |x: i64| x.rem_euclid(p as i64) as u64;
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    for v in vectors {
        let mut row: Vec<(usize, u64)> = v
            .iter()
            .map(|&(i, x)| (i, reduce(x)))
            .filter(|&(_, x)| x != 0)
            .collect();
        while let Some(&(lead, lead_val)) = row.first() {
            match pivots.get(&lead) {
                Some(piv) => {
                    // piv is monic; subtract lead_val * piv.
                    let mut out = Vec::with_capacity(row.len() + piv.len());
                    let (mut i, mut j) = (0, 0);
                    while i < row.len() || j < piv.len() {
                        if j == piv.len() || (i < row.len() && row[i].0 < piv[j].0) {
                            out.push(row[i]);
                            i += 1;
                        } else if i == row.len() || piv[j].0 < row[i].0 {
                            out.push((piv[j].0, (p - lead_val * piv[j].1 % p) % p));
                            j += 1;
                        } else {
                            let val = (row[i].1 + p - lead_val * piv[j].1 % p) % p;
                            if val != 0 {
                                out.push((row[i].0, val));
                            }
                            i += 1;
                            j += 1;
                        }
                    }
                    row = out;
                }
                None => {
                    let inv = pow_mod(lead_val, p - 2, p);
                    for (_, x) in row.iter_mut() {
                        *x = *x * inv % p;
                    }
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}
