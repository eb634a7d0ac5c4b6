//! Compositions and their descent sets.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::Partition;

/// An ordered list of positive integers; the empty composition has weight 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<usize>);

impl Composition {
    /// Panics on a zero part.
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "composition parts must be positive: {parts:?}");
        Composition(parts)
    }

    pub fn try_new(parts: Vec<usize>) -> crate::Result<Self> {
        if parts.contains(&0) {
            return Err(crate::Error::Invalid(format!("zero part in composition {parts:?}")));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn single(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Composition(vec![n])
        }
    }

    /// `(1, 1, ..., 1)` of weight `n`.
    pub fn ones(n: usize) -> Self {
        Composition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `{i_1, i_1 + i_2, ...}` without the total.
    pub fn descent_set(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.len().saturating_sub(1));
        for &p in &self.0[..self.len().saturating_sub(1)] {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// Inverse of [`Composition::descent_set`] for weight `n`.
    pub fn from_descent_set(n: usize, des: &[usize]) -> Self {
        if n == 0 {
            return Self::empty();
        }
        let mut prev = 0;
        let mut parts = Vec::with_capacity(des.len() + 1);
        for &d in des {
            assert!(d > prev && d < n, "bad descent set {des:?} for n = {n}");
            parts.push(d - prev);
            prev = d;
        }
        parts.push(n - prev);
        Composition(parts)
    }

    /// Descent set as a bitmask (bit `i-1` for descent `i`).
    pub fn descent_mask(&self) -> u64 {
        self.descent_set().iter().fold(0, |m, d| m | (1 << (d - 1)))
    }

    pub fn from_descent_mask(n: usize, mask: u64) -> Self {
        let des: Vec<usize> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        Self::from_descent_set(n, &des)
    }

    pub fn maj(&self) -> usize {
        self.descent_set().iter().sum()
    }

    pub fn reversed(&self) -> Self {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// The conjugate composition (complementary descent set, read backwards).
    pub fn conjugate(&self) -> Self {
        let n = self.weight();
        if n == 0 {
            return Self::empty();
        }
        let des = self.descent_set();
        let comp: Vec<usize> = (1..n).filter(|i| !des.contains(i)).collect();
        Self::from_descent_set(n, &comp).reversed()
    }

    /// `I` sorted into a partition.
    pub fn sorted(&self) -> Partition {
        Partition::new(self.0.clone())
    }

    pub fn has_part(&self, k: usize) -> bool {
        self.0.contains(&k)
    }

    pub fn count_part(&self, k: usize) -> usize {
        self.0.iter().filter(|&&p| p == k).count()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Composition(v)
    }

    /// `I ▷ J`: glue the last part of `I` to the first part of `J`.
    pub fn near_concat(&self, other: &Self) -> Self {
        match (self.0.split_last(), other.0.split_first()) {
            (Some((l, init)), Some((f, rest))) => {
                let mut v = init.to_vec();
                v.push(l + f);
                v.extend_from_slice(rest);
                Composition(v)
            }
            _ => self.concat(other),
        }
    }

    /// Whether `self` is finer than (or equal to) `other`.
    pub fn refines(&self, other: &Self) -> bool {
        if self.weight() != other.weight() {
            return false;
        }
        let d = self.descent_mask();
        let e = other.descent_mask();
        d & e == e
    }

    /// All compositions of `n`, in lexicographic order of parts.
    pub fn all(n: usize) -> Vec<Composition> {
        let mut out = Vec::with_capacity(1 << n.saturating_sub(1));
        let mut cur = Vec::new();
        fn rec(rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if rem == 0 {
                out.push(Composition(cur.clone()));
                return;
            }
            for p in 1..=rem {
                cur.push(p);
                rec(rem - p, cur, out);
                cur.pop();
            }
        }
        rec(n, &mut cur, &mut out);
        out
    }

    /// Compositions of `n` with exactly `len` parts.
    pub fn all_with_len(n: usize, len: usize) -> Vec<Composition> {
        Self::all(n).into_iter().filter(|c| c.len() == len).collect()
    }

    /// Compositions of `n` coarser than or equal to `self`.
    pub fn coarsenings(&self) -> Vec<Composition> {
        let n = self.weight();
        let d = self.descent_set();
        let mut out = Vec::with_capacity(1 << d.len());
        for mask in 0u64..(1 << d.len()) {
            let sub: Vec<usize> = d.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x).collect();
            out.push(Self::from_descent_set(n, &sub));
        }
        out.sort();
        out
    }

    /// Compositions of `n` finer than or equal to `self`.
    pub fn refinements(&self) -> Vec<Composition> {
        let e = self.descent_mask();
        let n = self.weight();
        Self::all(n).into_iter().filter(|c| c.descent_mask() & e == e).collect()
    }

    /// Distinct rearrangements of the parts, sorted.
    pub fn rearrangements(&self) -> Vec<Composition> {
        let mut parts = self.0.clone();
        parts.sort();
        let mut out = Vec::new();
        loop {
            out.push(Composition(parts.clone()));
            if !next_permutation(&mut parts) {
                break;
            }
        }
        out
    }
}

/// Advances to the next lexicographic arrangement; false after the last one.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl From<Vec<usize>> for Composition {
    fn from(v: Vec<usize>) -> Self {
        Composition::new(v)
    }
}

impl From<&[usize]> for Composition {
    fn from(v: &[usize]) -> Self {
        Composition::new(v.to_vec())
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parts separated by commas, e.g. `2,1`; the empty composition prints as `()`.
impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}
