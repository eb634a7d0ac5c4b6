//! Dense coefficient vectors over the packed words of one length, with a
//! precomputed table of `pack(u, v)`.

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::combinatorics::{pack_biword, PackedWord};
use crate::exact::{modp, Rational};
use crate::{Error, Result};

use super::element::{Wq, WqsymElement};

/// Largest degree with a multiplication table (4683² entries at `n = 6`).
pub const TABLE_MAX_N: usize = 5;

pub struct Table {
    pub n: usize,
    pub words: Vec<PackedWord>,
    mult: Vec<u32>,
}

impl Table {
    pub fn new(n: usize) -> Result<Self> {
        if n > TABLE_MAX_N {
            return Err(Error::CostGuard { what: "packed word table", n, limit: TABLE_MAX_N });
        }
        let words = PackedWord::all(n);
        let len = words.len();
        let mut mult = Vec::with_capacity(len * len);
        for u in &words {
            for v in &words {
                let w = pack_biword(u.word(), v.word()).expect("equal lengths");
                mult.push(words.binary_search(&w).expect("packed") as u32);
            }
        }
        Ok(Table { n, words, mult })
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn index(&self, u: &PackedWord) -> usize {
        self.words.binary_search(u).expect("word of the table degree")
    }

    /// Index of `pack(words[a], words[b])`.
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.len() + b] as usize
    }

    /// `x * y` on integer vectors.
    pub fn mul(&self, x: &[i128], y: &[i128]) -> Vec<i128> {
        let ys: Vec<(usize, i128)> = y.iter().copied().enumerate().filter(|(_, c)| *c != 0).collect();
        let mut out = vec![0i128; self.len()];
        for (a, &cx) in x.iter().enumerate().filter(|(_, c)| **c != 0) {
            let row = &self.mult[a * self.len()..(a + 1) * self.len()];
            for &(b, cy) in &ys {
                let slot = &mut out[row[b] as usize];
                *slot = cx.checked_mul(cy).and_then(|p| slot.checked_add(p)).expect("i128 overflow");
            }
        }
        out
    }

    /// `(d, v)` with `x = v / d` and `v` integral.
    pub fn integer_vector(&self, x: &Wq) -> (i128, Vec<i128>) {
        let mut den = num_bigint::BigInt::from(1);
        for (_, c) in x.iter() {
            den = den.lcm(c.denom());
        }
        let mut v = vec![0i128; self.len()];
        for (u, c) in x.iter() {
            let k = c.numer() * (&den / c.denom());
            v[self.index(u)] = k.to_i128().expect("coefficient fits in i128");
        }
        (den.to_i128().expect("denominator fits in i128"), v)
    }

    pub fn from_integer_vector(&self, den: i128, v: &[i128]) -> WqsymElement {
        let d = Rational::from_integer(den.into());
        let terms: Wq = v
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(i, &c)| (self.words[i].clone(), Rational::from_integer(c.into()) / &d))
            .collect();
        WqsymElement::new(self.n, terms)
    }

    pub fn element_vector(&self, x: &WqsymElement) -> (i128, Vec<i128>) {
        self.integer_vector(x.terms())
    }
}

pub fn to_mod(v: &[i128]) -> Vec<u64> {
    v.iter().map(|&c| modp::from_i128(c)).collect()
}

pub fn is_zero(v: &[i128]) -> bool {
    v.iter().all(|c| c.is_zero())
}
