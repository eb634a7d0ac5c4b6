//! Dense row echelon forms over `GF(p)`, `p = 2^61 - 1`.
//!
//! A rank computed here never exceeds the rank over `Q` of the same integer
//! vectors, so it certifies independence when it reaches the family size.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use super::Rational;

pub const P: u64 = (1 << 61) - 1;

pub fn mul(a: u64, b: u64) -> u64 {
    let x = a as u128 * b as u128;
    let lo = (x as u64) & P;
    let hi = (x >> 61) as u64;
    let s = lo + hi;
    if s >= P {
        s - P
    } else {
        s
    }
}

pub fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

pub fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

pub fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    r
}

pub fn inv(a: u64) -> u64 {
    assert!(a != 0, "inverse of zero mod p");
    pow(a, P - 2)
}

pub fn from_i128(x: i128) -> u64 {
    x.rem_euclid(P as i128) as u64
}

fn from_bigint(x: &BigInt) -> u64 {
    let r = x.mod_floor(&BigInt::from(P));
    r.to_u64().expect("reduced residue fits")
}

/// `None` when the denominator vanishes mod `p`.
pub fn from_rational(x: &Rational) -> Option<u64> {
    let d = from_bigint(&x.denom().abs());
    if d == 0 {
        return None;
    }
    let n = from_bigint(x.numer());
    let n = if x.denom().is_negative() { sub(0, n) } else { n };
    Some(mul(n, inv(d)))
}

/// Incremental reduced echelon form of dense vectors of a fixed length.
#[derive(Clone, Debug)]
pub struct ModEchelon {
    len: usize,
    rows: Vec<(usize, Vec<u64>)>,
}

impl ModEchelon {
    pub fn new(len: usize) -> Self {
        ModEchelon { len, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [u64]) {
        for (piv, row) in &self.rows {
            let c = v[*piv];
            if c != 0 {
                for (x, y) in v.iter_mut().zip(row) {
                    if *y != 0 {
                        *x = sub(*x, mul(c, *y));
                    }
                }
            }
        }
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        assert_eq!(v.len(), self.len, "vector length");
        self.reduce(&mut v);
        let Some(piv) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let s = inv(v[piv]);
        for x in v.iter_mut() {
            *x = mul(*x, s);
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[piv];
            if c != 0 {
                for (x, y) in row.iter_mut().zip(&v) {
                    if *y != 0 {
                        *x = sub(*x, mul(c, *y));
                    }
                }
            }
        }
        self.rows.push((piv, v));
        true
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }
}

/// Rank of a family of dense vectors.
pub fn rank<I: IntoIterator<Item = Vec<u64>>>(len: usize, vs: I) -> usize {
    let mut e = ModEchelon::new(len);
    for v in vs {
        e.insert(v);
        if e.rank() == len {
            break;
        }
    }
    e.rank()
}
