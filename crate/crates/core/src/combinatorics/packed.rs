//! Packed words and set partitions.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Composition, Partition};
use crate::{Error, Result};

/// A word whose set of letters is `{1, ..., max}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PackedWord(Vec<usize>);

/// Replaces the `k`-th smallest letter by `k` throughout.
pub fn pack<T: Ord + Clone>(word: &[T]) -> PackedWord {
    let mut letters: Vec<T> = word.to_vec();
    letters.sort();
    letters.dedup();
    PackedWord(word.iter().map(|x| letters.binary_search(x).expect("letter present") + 1).collect())
}

/// Packs the biword `(u_i, v_i)` with respect to the lexicographic order on biletters.
pub fn pack_biword(u: &[usize], v: &[usize]) -> Result<PackedWord> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch(u.len(), v.len()));
    }
    let bi: Vec<(usize, usize)> = u.iter().copied().zip(v.iter().copied()).collect();
    Ok(pack(&bi))
}

impl PackedWord {
    pub fn new(w: Vec<usize>) -> Self {
        Self::try_new(w).expect("not a packed word")
    }

    pub fn try_new(w: Vec<usize>) -> Result<Self> {
        let p = pack(&w);
        if p.0 != w {
            return Err(Error::Invalid(format!("not a packed word: {w:?}")));
        }
        Ok(p)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let w: Option<Vec<usize>> = s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect();
        w.ok_or_else(|| Error::Parse(format!("bad packed word {s:?}"))).and_then(Self::try_new)
    }

    pub fn ones(n: usize) -> Self {
        PackedWord(vec![1; n])
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_letter(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Evaluation: `ev(u)_k` = number of occurrences of `k`.
    pub fn evaluation(&self) -> Composition {
        let mut c = vec![0; self.max_letter()];
        for &x in &self.0 {
            c[x - 1] += 1;
        }
        Composition::new(c)
    }

    /// The set composition `(u^{-1}(1), u^{-1}(2), ...)`.
    pub fn set_composition(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.max_letter()];
        for (i, &x) in self.0.iter().enumerate() {
            blocks[x - 1].push(i + 1);
        }
        blocks
    }

    pub fn from_set_composition(n: usize, blocks: &[Vec<usize>]) -> Self {
        let mut w = vec![0; n];
        for (k, b) in blocks.iter().enumerate() {
            for &i in b {
                w[i - 1] = k + 1;
            }
        }
        PackedWord::new(w)
    }

    /// `Π(u)`: forget the order of the blocks.
    pub fn set_partition(&self) -> SetPartition {
        SetPartition::new(self.set_composition())
    }

    /// No letter occurs exactly once.
    pub fn is_non_unitary(&self) -> bool {
        !self.evaluation().has_part(1)
    }

    /// Some letter occurs exactly once.
    pub fn has_singleton_letter(&self) -> bool {
        self.evaluation().has_part(1)
    }

    /// Permutes the letters: letter `k` becomes `perm[k-1]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        PackedWord(self.0.iter().map(|&x| perm[x - 1]).collect())
    }

    /// All packed words of length `n`, sorted.
    pub fn all(n: usize) -> Vec<PackedWord> {
        let mut out = Vec::new();
        for sp in SetPartition::all(n) {
            let mut order: Vec<usize> = (0..sp.num_blocks()).collect();
            loop {
                let blocks: Vec<Vec<usize>> = order.iter().map(|&k| sp.0[k].clone()).collect();
                out.push(PackedWord::from_set_composition(n, &blocks));
                if !super::composition::next_permutation(&mut order) {
                    break;
                }
            }
        }
        out.sort();
        out
    }

    /// Packed words with a prescribed evaluation.
    pub fn with_evaluation(ev: &Composition) -> Vec<PackedWord> {
        let n = ev.weight();
        let mut letters: Vec<usize> = Vec::with_capacity(n);
        for (k, &m) in ev.parts().iter().enumerate() {
            letters.extend(std::iter::repeat_n(k + 1, m));
        }
        let mut out = Vec::new();
        loop {
            out.push(PackedWord(letters.clone()));
            if !super::composition::next_permutation(&mut letters) {
                break;
            }
        }
        out
    }
}

impl fmt::Debug for PackedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PackedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.iter().all(|&x| x < 10) { "" } else { "," };
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(sep))
    }
}

/// A set partition of `{1..n}`: sorted blocks, each sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SetPartition(Vec<Vec<usize>>);

impl SetPartition {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Self {
        blocks.retain(|b| !b.is_empty());
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort();
        SetPartition(blocks)
    }

    /// Parses `12|3|4|56|7` (single-digit elements).
    pub fn parse(s: &str) -> Result<Self> {
        let blocks: Option<Vec<Vec<usize>>> =
            s.split('|').map(|b| b.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()).collect();
        blocks.map(SetPartition::new).ok_or_else(|| Error::Parse(format!("bad set partition {s:?}")))
    }

    pub fn singletons(n: usize) -> Self {
        SetPartition((1..=n).map(|i| vec![i]).collect())
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|b| b.len()).sum()
    }

    pub fn num_blocks(&self) -> usize {
        self.0.len()
    }

    /// `Λ(π)`: the partition of block sizes.
    pub fn shape(&self) -> Partition {
        Partition::new(self.0.iter().map(|b| b.len()).collect())
    }

    pub fn is_non_unitary(&self) -> bool {
        self.0.iter().all(|b| b.len() > 1)
    }

    fn block_of(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for (k, b) in self.0.iter().enumerate() {
            for &i in b {
                m.insert(i, k);
            }
        }
        m
    }

    /// Common refinement (intersections of blocks).
    pub fn meet(&self, other: &Self) -> Self {
        let mut out = Vec::new();
        for a in &self.0 {
            for b in &other.0 {
                let c: Vec<usize> = a.iter().copied().filter(|x| b.contains(x)).collect();
                if !c.is_empty() {
                    out.push(c);
                }
            }
        }
        SetPartition::new(out)
    }

    /// Every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Self) -> bool {
        let m = other.block_of();
        self.0.iter().all(|b| b.iter().all(|x| m.get(x) == m.get(&b[0])))
    }

    /// All set partitions of `{1..n}`, sorted.
    pub fn all(n: usize) -> Vec<SetPartition> {
        let mut out = Vec::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        fn rec(i: usize, n: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<SetPartition>) {
            if i > n {
                out.push(SetPartition::new(blocks.clone()));
                return;
            }
            for k in 0..blocks.len() {
                blocks[k].push(i);
                rec(i + 1, n, blocks, out);
                blocks[k].pop();
            }
            blocks.push(vec![i]);
            rec(i + 1, n, blocks, out);
            blocks.pop();
        }
        rec(1, n, &mut blocks, &mut out);
        out.sort();
        out
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Blocks separated by `|`, e.g. `12|3|4|56|7`.
impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let big = self.0.iter().flatten().any(|&x| x >= 10);
        let s: Vec<String> = self
            .0
            .iter()
            .map(|b| {
                let v: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                v.join(if big { "," } else { "" })
            })
            .collect();
        write!(f, "{}", s.join("|"))
    }
}
