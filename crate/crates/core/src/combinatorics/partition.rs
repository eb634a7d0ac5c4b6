//! Integer partitions.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::Composition;
use crate::exact::rational::factorial;

/// A weakly decreasing list of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the given parts; panics on a zero part.
    pub fn new(mut parts: Vec<usize>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
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

    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// `(i, m_i)` for each distinct part, decreasing in `i`.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `m_λ = Π m_i(λ)!`.
    pub fn m_lambda(&self) -> BigInt {
        self.multiplicities().iter().fold(BigInt::one(), |acc, &(_, m)| acc * factorial(m))
    }

    /// `z_λ = Π i^{m_i} m_i!`.
    pub fn z_lambda(&self) -> BigInt {
        self.multiplicities()
            .iter()
            .fold(BigInt::one(), |acc, &(i, m)| acc * BigInt::from(i).pow(m as u32) * factorial(m))
    }

    pub fn has_part(&self, k: usize) -> bool {
        self.0.contains(&k)
    }

    pub fn without_ones(&self) -> Partition {
        Partition(self.0.iter().copied().filter(|&p| p != 1).collect())
    }

    pub fn with_ones(&self, k: usize) -> Partition {
        let mut v = self.0.clone();
        v.extend(std::iter::repeat_n(1, k));
        Partition(v)
    }

    pub fn as_composition(&self) -> Composition {
        Composition::new(self.0.clone())
    }

    /// Union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Partition::new(v)
    }

    /// Partitions of `n` in reverse lexicographic order (`n` first, `1^n` last).
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }

    /// Partitions of `n` with no part equal to one, reverse lexicographic.
    pub fn all_without_ones(n: usize) -> Vec<Partition> {
        Self::all(n).into_iter().filter(|p| !p.has_part(1)).collect()
    }

    /// Number of partitions of `n`.
    pub fn count(n: usize) -> usize {
        Self::all(n).len()
    }

    /// `self ≺_p mu`: the parts of `self` can be grouped so that the groups
    /// sum to the parts of `mu`, each group being a single part or containing
    /// at least two different values. (A group of equal values would be the
    /// content of a Lie monomial `x_k^m`, `m >= 2`, which vanishes.)
    pub fn p_finer(&self, mu: &Partition) -> bool {
        if self.weight() != mu.weight() {
            return false;
        }
        fn rec(lam: &[usize], k: usize, rem: &mut [usize], groups: &mut [Vec<usize>]) -> bool {
            if k == lam.len() {
                return groups.iter().all(|g| g.len() == 1 || g.iter().any(|&x| x != g[0]));
            }
            for t in 0..rem.len() {
                if rem[t] < lam[k] {
                    continue;
                }
                // targets in the same state are interchangeable
                if (0..t).any(|u| rem[u] == rem[t] && groups[u] == groups[t]) {
                    continue;
                }
                rem[t] -= lam[k];
                groups[t].push(lam[k]);
                let ok = rec(lam, k + 1, rem, groups);
                groups[t].pop();
                rem[t] += lam[k];
                if ok {
                    return true;
                }
            }
            false
        }
        let mut rem = mu.0.clone();
        let mut groups = vec![Vec::new(); mu.len()];
        rec(&self.0, 0, &mut rem, &mut groups)
    }

    /// Partitions obtained by adding up two parts with distinct values.
    pub fn merge_two_distinct(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.0[i] != self.0[j] {
                    let mut v: Vec<usize> =
                        self.0.iter().enumerate().filter(|(k, _)| *k != i && *k != j).map(|(_, &p)| p).collect();
                    v.push(self.0[i] + self.0[j]);
                    let p = Partition::new(v);
                    if !out.contains(&p) {
                        out.push(p);
                    }
                }
            }
        }
        out
    }
}

/// Reverse lexicographic order, so that sorting puts `(n)` first.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parts concatenated when all are single digits (`32`, `2111`), comma separated otherwise.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let sep = if self.0.iter().all(|&p| p < 10) { "" } else { "," };
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(sep))
    }
}
