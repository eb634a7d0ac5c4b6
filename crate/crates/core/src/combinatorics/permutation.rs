//! Permutations in one-line notation.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::composition::next_permutation;
use super::Partition;

/// A bijection of `{1..n}`, stored as the word `σ(1) σ(2) ... σ(n)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// Panics unless `w` is a permutation of `1..=w.len()`.
    pub fn new(w: Vec<usize>) -> Self {
        Self::try_new(w).expect("not a permutation")
    }

    pub fn try_new(w: Vec<usize>) -> crate::Result<Self> {
        let n = w.len();
        let mut seen = vec![false; n + 1];
        for &x in &w {
            if x == 0 || x > n || seen[x] {
                return Err(crate::Error::Invalid(format!("not a permutation: {w:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation(w))
    }

    /// Parses a digit string such as `"2143"` (sizes below 10 only).
    pub fn parse(s: &str) -> crate::Result<Self> {
        let w: Option<Vec<usize>> = s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect();
        w.ok_or_else(|| crate::Error::Parse(format!("bad permutation {s:?}"))).and_then(Self::try_new)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// `n n-1 ... 1`.
    pub fn reversal(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    /// `σ(i)` for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "size mismatch in composition");
        Permutation(other.0.iter().map(|&i| self.0[i - 1]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// Positions `i` with `σ(i) > σ(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.len()).filter(|&i| self.0[i - 1] > self.0[i]).collect()
    }

    pub fn descent_mask(&self) -> u64 {
        self.descents().iter().fold(0, |m, d| m | (1 << (d - 1)))
    }

    pub fn maj(&self) -> usize {
        self.descents().iter().sum()
    }

    /// Number of pairs `i < j` with `σ(i) > σ(j)`.
    pub fn inversions(&self) -> usize {
        let w = &self.0;
        let mut c = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// Pairs of values `(a, b)`, `a < b`, with `b` written before `a`.
    pub fn value_inversions(&self) -> Vec<(usize, usize)> {
        let pos = self.inverse();
        let n = self.len();
        let mut out = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                if pos.0[b - 1] < pos.0[a - 1] {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Pairs of positions `(i, j)`, `i < j`, with `σ(i) > σ(j)`.
    pub fn position_inversions(&self) -> Vec<(usize, usize)> {
        let w = &self.0;
        let mut out = Vec::new();
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    out.push((i + 1, j + 1));
                }
            }
        }
        out
    }

    pub fn fixed_points(&self) -> usize {
        self.0.iter().enumerate().filter(|(i, &x)| x == i + 1).count()
    }

    pub fn is_derangement(&self) -> bool {
        self.fixed_points() == 0
    }

    /// Cycles, each starting with its smallest element, ordered by first element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for s in 1..=n {
            if seen[s] {
                continue;
            }
            let mut c = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                c.push(x);
                x = self.0[x - 1];
            }
            out.push(c);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().iter().map(|c| c.len()).collect())
    }

    /// Builds a permutation of `1..=n` from disjoint cycles (missing points are fixed).
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Self {
        let mut w: Vec<usize> = (1..=n).collect();
        for c in cycles {
            for (k, &x) in c.iter().enumerate() {
                w[x - 1] = c[(k + 1) % c.len()];
            }
        }
        Permutation::new(w)
    }

    /// Positions (1-based) of left-right minima.
    pub fn lr_minima(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut min = usize::MAX;
        for (i, &x) in self.0.iter().enumerate() {
            if x < min {
                min = x;
                out.push(i + 1);
            }
        }
        out
    }

    /// Shifts all values by `k`.
    pub fn shifted(&self, k: usize) -> Vec<usize> {
        self.0.iter().map(|x| x + k).collect()
    }

    /// `α ▶ β = α[|β|] · β`.
    pub fn left_shifted_concat(&self, beta: &Self) -> Self {
        let mut w = self.shifted(beta.len());
        w.extend_from_slice(&beta.0);
        Permutation(w)
    }

    /// Standardization of a word: ties broken left to right.
    pub fn standardize(word: &[usize]) -> Self {
        let mut idx: Vec<usize> = (0..word.len()).collect();
        idx.sort_by_key(|&i| (word[i], i));
        let mut w = vec![0; word.len()];
        for (rank, &i) in idx.iter().enumerate() {
            w[i] = rank + 1;
        }
        Permutation(w)
    }

    /// All permutations of size `n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (1..=n).collect();
        let mut out = Vec::new();
        loop {
            out.push(Permutation(cur.clone()));
            if !next_permutation(&mut cur) {
                break;
            }
        }
        out
    }

    /// The cycle `n 1 2 ... n-1`.
    pub fn gamma(n: usize) -> Self {
        if n == 0 {
            return Self::identity(0);
        }
        let mut w = vec![n];
        w.extend(1..n);
        Permutation(w)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Digits concatenated for `n < 10`, comma separated otherwise.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.len() < 10 { "" } else { "," };
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(sep))
    }
}
