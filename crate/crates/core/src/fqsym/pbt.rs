//! Planar binary trees inside `FQSym` through sylvester classes, and the
//! dimensions of `PBT_n^♯`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rand::seq::index::sample;
use rand::{rngs::StdRng, SeedableRng};
use serde_json::{json, Value};

use crate::combinatorics::Permutation;
use crate::exact::{modp, Rational};
use crate::{Error, Result};

use super::dense::{self, Table};
use super::element::{Fq, FqsymBasis, FqsymElement};
use super::sharp::sigma1_sharp;
use super::ssigma::s_sigma;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BinTree {
    Leaf,
    Node(Box<BinTree>, Box<BinTree>),
}

impl BinTree {
    pub fn size(&self) -> usize {
        match self {
            BinTree::Leaf => 0,
            BinTree::Node(l, r) => 1 + l.size() + r.size(),
        }
    }

    /// All trees with `n` nodes.
    pub fn all(n: usize) -> Vec<BinTree> {
        if n == 0 {
            return vec![BinTree::Leaf];
        }
        let mut out = Vec::new();
        for k in 0..n {
            for l in BinTree::all(k) {
                for r in BinTree::all(n - 1 - k) {
                    out.push(BinTree::Node(Box::new(l.clone()), Box::new(r)));
                }
            }
        }
        out
    }
}

impl std::fmt::Display for BinTree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BinTree::Leaf => write!(f, "."),
            BinTree::Node(l, r) => write!(f, "({l}{r})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reading {
    LeftToRight,
    RightToLeft,
}

fn insert(t: &mut Option<Box<Lab>>, x: usize) {
    match t {
        None => *t = Some(Box::new(Lab(x, None, None))),
        Some(node) => {
            if x < node.0 {
                insert(&mut node.1, x)
            } else {
                insert(&mut node.2, x)
            }
        }
    }
}

struct Lab(usize, Option<Box<Lab>>, Option<Box<Lab>>);

fn shape(t: &Option<Box<Lab>>) -> BinTree {
    match t {
        None => BinTree::Leaf,
        Some(n) => BinTree::Node(Box::new(shape(&n.1)), Box::new(shape(&n.2))),
    }
}

/// Shape of the binary search tree obtained by inserting the letters of `σ`.
pub fn bst_shape(sigma: &Permutation, reading: Reading) -> BinTree {
    let mut t: Option<Box<Lab>> = None;
    let w = sigma.word();
    match reading {
        Reading::LeftToRight => w.iter().for_each(|&x| insert(&mut t, x)),
        Reading::RightToLeft => w.iter().rev().for_each(|&x| insert(&mut t, x)),
    }
    shape(&t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PbtConvention {
    pub reading: Reading,
    pub basis: FqsymBasis,
}

impl PbtConvention {
    pub fn all() -> Vec<Self> {
        let mut out = Vec::new();
        for reading in [Reading::RightToLeft, Reading::LeftToRight] {
            for basis in [FqsymBasis::F, FqsymBasis::G] {
                out.push(PbtConvention { reading, basis });
            }
        }
        out
    }

    pub fn describe(&self) -> String {
        let r = match self.reading {
            Reading::LeftToRight => "left to right",
            Reading::RightToLeft => "right to left",
        };
        format!("P_T = Σ {}_σ over σ whose insertion tree ({r}) is T", self.basis.tag())
    }

    /// The class key of the `F` index `f`.
    fn class_of_f(&self, f: &Permutation) -> BinTree {
        match self.basis {
            FqsymBasis::G => bst_shape(&f.inverse(), self.reading),
            _ => bst_shape(f, self.reading),
        }
    }

    /// `F` indices grouped by tree.
    pub fn classes(&self, n: usize) -> BTreeMap<BinTree, Vec<Permutation>> {
        let mut out: BTreeMap<BinTree, Vec<Permutation>> = BTreeMap::new();
        for p in Permutation::all(n) {
            out.entry(self.class_of_f(&p)).or_default().push(p);
        }
        out
    }

    pub fn p_t(&self, t: &BinTree) -> FqsymElement {
        let n = t.size();
        let terms: Fq = Permutation::all(n)
            .into_iter()
            .filter(|p| &self.class_of_f(p) == t)
            .map(|p| (p, Rational::from_integer(1.into())))
            .collect();
        FqsymElement::new(n, FqsymBasis::F, terms)
    }

    /// Whether `x` lies in the span of the `P_T`: its `F` coefficients are constant on classes.
    pub fn contains(&self, x: &FqsymElement) -> bool {
        let f = x.f_terms();
        let mut seen: BTreeMap<BinTree, Rational> = BTreeMap::new();
        Permutation::all(x.degree()).into_iter().all(|p| {
            let c = f.coeff(&p);
            match seen.entry(self.class_of_f(&p)) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                    true
                }
                std::collections::btree_map::Entry::Occupied(e) => *e.get() == c,
            }
        })
    }

    /// Products `P_T P_U` stay in the span, for `|T| + |U| <= max_n`.
    pub fn closed_under_product(&self, max_n: usize) -> bool {
        for a in 1..max_n {
            for b in 1..=max_n - a {
                for t in BinTree::all(a) {
                    let pt = self.p_t(&t);
                    for u in BinTree::all(b) {
                        if !self.contains(&pt.product(&self.p_t(&u))) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// `S^σ` for `σ` avoiding 132 lie in the span, degrees up to `max_n`.
    pub fn contains_132_avoiders(&self, max_n: usize) -> bool {
        (1..=max_n).all(|n| {
            Permutation::all(n)
                .into_iter()
                .filter(avoids_132)
                .all(|s| s_sigma(&s).map(|x| self.contains(&x)).unwrap_or(false))
        })
    }
}

pub fn avoids_132(p: &Permutation) -> bool {
    let w = p.word();
    let n = w.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if w[i] < w[k] && w[k] < w[j] {
                    return false;
                }
            }
        }
    }
    true
}

/// First convention with a multiplicatively closed span containing the `S^σ`, `σ` avoiding 132.
pub fn selected_convention() -> Option<PbtConvention> {
    static SEL: OnceLock<Option<PbtConvention>> = OnceLock::new();
    *SEL.get_or_init(|| {
        PbtConvention::all().into_iter().find(|c| c.closed_under_product(5) && c.contains_132_avoiders(4))
    })
}

pub const PBT_MAX_N: usize = 8;
/// Above this degree the rank is taken on a sample of coordinates.
pub const PBT_FULL_RANK_MAX_N: usize = 7;
const SAMPLED_COORDINATES: usize = 8192;

#[derive(Clone, Debug)]
pub struct PbtDegree {
    pub n: usize,
    pub trees: usize,
    /// Rank of `{P_T^♯}` mod `p`; a lower bound for the rational rank.
    pub sharp_rank: usize,
    /// Whether the rank used every coordinate.
    pub full_coordinates: bool,
    pub fine: u64,
}

#[derive(Clone, Debug)]
pub struct PbtReport {
    pub convention: Option<String>,
    pub degrees: Vec<PbtDegree>,
}

impl PbtReport {
    /// "holds" if every degree matches, "fails" if some fully computed degree differs.
    pub fn verdict(&self) -> &'static str {
        if self.convention.is_none() {
            return "unresolved";
        }
        if self.degrees.iter().all(|d| d.sharp_rank as u64 == d.fine) {
            "holds"
        } else if self.degrees.iter().any(|d| d.full_coordinates && d.sharp_rank as u64 != d.fine) {
            "fails"
        } else {
            "unresolved"
        }
    }

    pub fn to_json(&self) -> Value {
        let ds: Vec<Value> = self
            .degrees
            .iter()
            .map(|d| {
                json!({"n": d.n, "trees": d.trees, "rank": d.sharp_rank, "fine": d.fine,
                       "full_coordinates": d.full_coordinates})
            })
            .collect();
        json!({"convention": self.convention, "verdict": self.verdict(), "degrees": ds})
    }
}

/// Fine numbers `1, 0, 1, 2, 6, 18, 57, ...` from `2 F_n + F_{n-1} = C_n`.
pub fn fine_numbers(up_to: usize) -> Vec<u64> {
    let mut cat = vec![1u64];
    for n in 1..=up_to {
        cat.push(cat[n - 1] * 2 * (2 * n as u64 - 1) / (n as u64 + 1));
    }
    let mut f = vec![1u64];
    for n in 1..=up_to {
        let prev = f[n - 1];
        f.push((cat[n] - prev) / 2);
    }
    f
}

fn sharp_rank(conv: &PbtConvention, n: usize) -> (usize, usize, bool) {
    let t = Table::new(n);
    let classes = conv.classes(n);
    let (_, e) = dense::integer_vector(&t, &sigma1_sharp(n).f_terms());
    let e = dense::to_mod(&e);
    let full = n <= PBT_FULL_RANK_MAX_N;
    let coords: Vec<usize> = if full {
        (0..t.len()).collect()
    } else {
        let mut rng = StdRng::seed_from_u64(0x5eed + n as u64);
        let mut v = sample(&mut rng, t.len(), SAMPLED_COORDINATES.min(t.len())).into_vec();
        v.sort_unstable();
        v
    };
    let inv: Vec<usize> = t.perms.iter().map(|p| dense::rank(&p.inverse())).collect();
    let mut ech = modp::ModEchelon::new(coords.len());
    for members in classes.values() {
        // Coefficient of F_π in F_σ * e is e[σ^{-1} π].
        let mut v = vec![0u64; coords.len()];
        for s in members {
            let si = inv[dense::rank(s)];
            for (slot, &pi) in v.iter_mut().zip(&coords) {
                *slot = modp::add(*slot, e[t.compose(si, pi)]);
            }
        }
        ech.insert(v);
    }
    (classes.len(), ech.rank(), full)
}

pub fn pbt_sharp_dims(up_to_n: usize) -> Result<PbtReport> {
    if up_to_n > PBT_MAX_N {
        return Err(Error::CostGuard { what: "pbt_sharp_dims", n: up_to_n, limit: PBT_MAX_N });
    }
    let Some(conv) = selected_convention() else {
        return Ok(PbtReport { convention: None, degrees: Vec::new() });
    };
    let fine = fine_numbers(up_to_n);
    let degrees = (0..=up_to_n)
        .map(|n| {
            let (trees, sharp_rank, full_coordinates) = sharp_rank(&conv, n);
            PbtDegree { n, trees, sharp_rank, full_coordinates, fine: fine[n] }
        })
        .collect();
    Ok(PbtReport { convention: Some(conv.describe()), degrees })
}

/// Whether `x` lies in `PBT` under the selected convention.
pub fn in_pbt(x: &FqsymElement) -> Result<bool> {
    let conv = selected_convention().ok_or_else(|| Error::Consistency("PBT convention unresolved".into()))?;
    Ok(conv.contains(x))
}
