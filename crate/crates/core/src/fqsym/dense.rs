//! Dense coefficient vectors indexed by the lexicographic rank of permutations.

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::combinatorics::Permutation;
use crate::exact::{modp, Rational};

use super::element::Fq;

/// Rank of `σ` in [`Permutation::all`].
pub fn rank(p: &Permutation) -> usize {
    let w = p.word();
    let n = w.len();
    let mut r = 0;
    for i in 0..n {
        let smaller = w[i + 1..].iter().filter(|&&x| x < w[i]).count();
        r = r * (n - i) + smaller;
    }
    r
}

/// The composition table `idx(σ∘τ)` as a flat `n! × n!` array.
pub struct Table {
    pub perms: Vec<Permutation>,
    words: Vec<Vec<usize>>,
}

impl Table {
    pub fn new(n: usize) -> Self {
        let perms = Permutation::all(n);
        let words = perms.iter().map(|p| p.word().iter().map(|&x| x - 1).collect()).collect();
        Table { perms, words }
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    /// Rank of `perms[a] ∘ perms[b]`.
    pub fn compose(&self, a: usize, b: usize) -> usize {
        let sa = &self.words[a];
        let n = sa.len();
        let mut r = 0;
        let mut used = 0u64;
        for (i, &j) in self.words[b].iter().enumerate() {
            let v = sa[j];
            let smaller = (used & ((1u64 << v) - 1)).count_ones() as usize;
            r = r * (n - i) + (v - smaller);
            used |= 1 << v;
        }
        r
    }
}

/// Common denominator and integer numerators of an `F`-expansion.
pub fn integer_vector(t: &Table, x: &Fq) -> (i128, Vec<i128>) {
    let l = x.iter().fold(num_bigint::BigInt::from(1), |acc, (_, c)| acc.lcm(c.denom()));
    let l128 = l.to_i128().expect("denominator fits in i128");
    let mut v = vec![0i128; t.len()];
    for (p, c) in x.iter() {
        let q = c * Rational::from_integer(l.clone());
        v[rank(p)] = q.to_integer().to_i128().expect("numerator fits in i128");
    }
    (l128, v)
}

/// `F`-coefficients of `F_σ * y` for `y` given densely, reduced mod `p`.
pub fn left_translate_mod(t: &Table, sigma: usize, y: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; t.len()];
    for (tau, &c) in y.iter().enumerate() {
        if c != 0 {
            out[t.compose(sigma, tau)] = c;
        }
    }
    out
}

pub fn to_mod(v: &[i128]) -> Vec<u64> {
    v.iter().map(|&x| modp::from_i128(x)).collect()
}

pub fn from_dense(t: &Table, den: i128, v: &[i128]) -> Fq {
    let d = Rational::from_integer(den.into());
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, &c)| (t.perms[i].clone(), Rational::from_integer(c.into()) / &d))
        .collect()
}
