//! The basis `S^σ = Σ_{τ ≤ σ} G_τ` and the matrix of `♯` on it.
//!
//! The weak order side, the `F`/`G` reading and the use of `σ` or `σ^{-1}` are
//! not fixed a priori; [`selected_convention`] picks the first of the eight
//! readings that reproduces the reference matrices for `n = 2, 3`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::combinatorics::foata::{consecutive_lr_min_stat, foata_phi, weak_covers, WeakSide};
use crate::combinatorics::Permutation;
use crate::exact::{frac, int, LinComb, Rational};
use crate::{Error, Result};

use super::dense::{self, Table};
use super::element::{Fq, FqsymBasis, FqsymElement};
use super::sharp::sigma1_sharp;

pub const S_SIGMA_MAX_N: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SSigmaConvention {
    pub side: WeakSide,
    /// `F` or `G` summands.
    pub basis: FqsymBasis,
    /// Compare `σ^{-1}` instead of `σ` in the weak order.
    pub inverse: bool,
}

impl SSigmaConvention {
    pub fn all() -> Vec<Self> {
        let mut out = Vec::new();
        for side in [WeakSide::Left, WeakSide::Right] {
            for basis in [FqsymBasis::F, FqsymBasis::G] {
                for inverse in [false, true] {
                    out.push(SSigmaConvention { side, basis, inverse });
                }
            }
        }
        out
    }

    pub fn describe(&self) -> String {
        let side = match self.side {
            WeakSide::Left => "left",
            WeakSide::Right => "right",
        };
        let arg = if self.inverse { "τ^{-1} ≤ σ^{-1}" } else { "τ ≤ σ" };
        format!("S^σ = Σ {}_τ over {arg} in the {side} weak order", self.basis.tag())
    }

    fn key(&self, p: &Permutation) -> Permutation {
        if self.inverse {
            p.inverse()
        } else {
            p.clone()
        }
    }

    /// The `F` index of the summand attached to `τ`.
    fn f_index(&self, tau: &Permutation) -> Permutation {
        match self.basis {
            FqsymBasis::G => tau.inverse(),
            _ => tau.clone(),
        }
    }
}

/// Down-sets of the weak order, as sorted lists of ranks.
fn down_sets(t: &Table, side: WeakSide) -> Vec<Vec<usize>> {
    let n = t.len();
    let mut by_inv: Vec<usize> = (0..n).collect();
    by_inv.sort_by_key(|&i| t.perms[i].inversions());
    let mut lower: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for c in weak_covers(&t.perms[i], side) {
            lower[dense::rank(&c)].push(i);
        }
    }
    let words = n.div_ceil(64).max(1);
    let mut bits: Vec<Vec<u64>> = vec![vec![0; words]; n];
    for &i in &by_inv {
        let mut b = vec![0u64; words];
        b[i / 64] |= 1 << (i % 64);
        for &j in &lower[i] {
            for (x, y) in b.iter_mut().zip(&bits[j]) {
                *x |= *y;
            }
        }
        bits[i] = b;
    }
    bits.iter().map(|b| (0..n).filter(|&j| b[j / 64] >> (j % 64) & 1 == 1).collect()).collect()
}

struct Frame {
    t: Table,
    /// `F`-ranks of the summands of `S^σ`, indexed by the rank of `σ`.
    support: Vec<Vec<usize>>,
    /// `F`-rank of the leading summand of `S^σ`.
    lead: Vec<usize>,
    /// Ranks of `σ` by decreasing length of the compared permutation.
    top_down: Vec<usize>,
}

impl Frame {
    fn new(n: usize, conv: SSigmaConvention) -> Self {
        let t = Table::new(n);
        let downs = down_sets(&t, conv.side);
        let mut support = Vec::with_capacity(t.len());
        let mut lead = Vec::with_capacity(t.len());
        for s in &t.perms {
            let k = dense::rank(&conv.key(s));
            support
                .push(downs[k].iter().map(|&j| dense::rank(&conv.f_index(&conv.key(&t.perms[j])))).collect::<Vec<_>>());
            lead.push(dense::rank(&conv.f_index(s)));
        }
        let mut top_down: Vec<usize> = (0..t.len()).collect();
        top_down.sort_by_key(|&i| std::cmp::Reverse(conv.key(&t.perms[i]).inversions()));
        Frame { t, support, lead, top_down }
    }

    /// Expansion of a dense `F` vector on the `S^σ`.
    fn to_s(&self, mut y: Vec<i128>) -> Vec<i128> {
        let mut out = vec![0i128; self.t.len()];
        for &s in &self.top_down {
            let c = y[self.lead[s]];
            if c != 0 {
                out[s] = c;
                for &f in &self.support[s] {
                    y[f] -= c;
                }
            }
        }
        debug_assert!(y.iter().all(|&x| x == 0));
        out
    }

    /// `(S^σ)^♯` on the `S` basis, column by column; entries over the common denominator.
    fn sharp_columns(&self, n: usize) -> (i128, Vec<Vec<i128>>) {
        use rayon::prelude::*;
        let (den, e) = dense::integer_vector(&self.t, &sigma1_sharp(n).f_terms());
        let e_support: Vec<(usize, i128)> =
            e.iter().enumerate().filter(|(_, c)| **c != 0).map(|(i, &c)| (i, c)).collect();
        let cols = (0..self.t.len())
            .into_par_iter()
            .map(|s| {
                let mut y = vec![0i128; self.t.len()];
                for &f in &self.support[s] {
                    for &(r, c) in &e_support {
                        y[self.t.compose(f, r)] += c;
                    }
                }
                self.to_s(y)
            })
            .collect();
        (den, cols)
    }
}

fn reference_matrices() -> Vec<(Vec<&'static str>, Vec<Vec<Rational>>)> {
    let z = Rational::zero;
    vec![
        (vec!["21", "12"], vec![vec![z(), frac(-1, 2)], vec![z(), int(1)]]),
        (
            vec!["321", "312", "231", "123", "132", "213"],
            vec![
                vec![z(), z(), z(), frac(1, 3), frac(-1, 3), frac(2, 3)],
                vec![z(), z(), z(), int(-1), z(), int(-1)],
                vec![z(), z(), z(), z(), z(), z()],
                vec![z(), z(), z(), int(1), z(), int(1)],
                vec![z(), z(), z(), z(), int(1), int(-1)],
                vec![z(), z(), z(), z(), z(), z()],
            ],
        ),
    ]
}

/// `M[τ][σ]`: coefficient of `S^τ` in `(S^σ)^♯`, in rank order.
pub fn sharp_matrix_with(conv: SSigmaConvention, n: usize) -> Vec<Vec<Rational>> {
    let fr = Frame::new(n, conv);
    let (den, cols) = fr.sharp_columns(n);
    let d = Rational::from_integer(den.into());
    (0..fr.t.len()).map(|r| cols.iter().map(|c| Rational::from_integer(c[r].into()) / &d).collect()).collect()
}

fn matches_reference(conv: SSigmaConvention) -> bool {
    reference_matrices().into_iter().all(|(labels, m)| {
        let perms: Vec<Permutation> = labels.iter().map(|s| Permutation::parse(s).expect("label")).collect();
        let got = sharp_matrix_with(conv, perms[0].len());
        perms
            .iter()
            .enumerate()
            .all(|(i, r)| perms.iter().enumerate().all(|(j, c)| got[dense::rank(r)][dense::rank(c)] == m[i][j]))
    })
}

/// The first convention reproducing the reference matrices, if any.
pub fn selected_convention() -> Option<SSigmaConvention> {
    static SEL: OnceLock<Option<SSigmaConvention>> = OnceLock::new();
    *SEL.get_or_init(|| SSigmaConvention::all().into_iter().find(|c| matches_reference(*c)))
}

/// Conventions reproducing the reference matrices.
pub fn matching_conventions() -> Vec<SSigmaConvention> {
    SSigmaConvention::all().into_iter().filter(|c| matches_reference(*c)).collect()
}

fn convention() -> Result<SSigmaConvention> {
    selected_convention().ok_or_else(|| Error::Consistency("S^σ convention unresolved".into()))
}

pub fn s_sigma_with(conv: SSigmaConvention, sigma: &Permutation) -> FqsymElement {
    let n = sigma.len();
    let t: Fq = Permutation::all(n)
        .into_iter()
        .filter(|tau| {
            crate::combinatorics::foata::weak_order_leq_side(&conv.key(tau), &conv.key(sigma), conv.side)
                .expect("equal sizes")
        })
        .map(|tau| (conv.f_index(&tau), Rational::from_integer(1.into())))
        .collect();
    FqsymElement::new(n, FqsymBasis::F, t)
}

pub fn s_sigma(sigma: &Permutation) -> Result<FqsymElement> {
    Ok(s_sigma_with(convention()?, sigma))
}

/// Coordinates of `x` on the `S^σ` basis.
pub fn to_s_sigma(x: &FqsymElement) -> Result<LinComb<Permutation>> {
    let conv = convention()?;
    let n = x.degree();
    let fr = Frame::new(n, conv);
    let f = x.f_terms();
    let mut rest: BTreeMap<usize, Rational> = f.iter().map(|(p, c)| (dense::rank(p), c.clone())).collect();
    let mut out = LinComb::zero();
    for &s in &fr.top_down {
        let c = rest.get(&fr.lead[s]).cloned().unwrap_or_else(Rational::zero);
        if !c.is_zero() {
            for &g in &fr.support[s] {
                let e = rest.entry(g).or_insert_with(Rational::zero);
                *e -= &c;
            }
            out.add_term(fr.t.perms[s].clone(), c);
        }
    }
    if rest.values().any(|c| !c.is_zero()) {
        return Err(Error::Consistency("S^σ elimination left a remainder".into()));
    }
    Ok(out)
}

/// `σ <' τ` iff `φ(σ^{-1}) <_lex φ(τ^{-1})`; this reproduces the reference orders.
pub fn prime_order(n: usize) -> Vec<Permutation> {
    let mut ps = Permutation::all(n);
    ps.sort_by_key(|p| foata_phi(&p.inverse()));
    ps
}

/// Order by `φ(σ)` itself.
pub fn literal_phi_order(n: usize) -> Vec<Permutation> {
    let mut ps = Permutation::all(n);
    ps.sort_by_key(foata_phi);
    ps
}

#[derive(Clone, Debug)]
pub struct SSigmaReport {
    pub n: usize,
    pub convention: Option<String>,
    /// Rows and columns sorted by `<'` (see [`prime_order`]).
    pub order: Vec<Permutation>,
    /// `matrix[i][j]`: coefficient of `S^{order[i]}` in `(S^{order[j]})^♯`.
    pub matrix: Vec<Vec<Rational>>,
    pub upper_triangular: bool,
    /// Diagonal is 1 when `σ^{-1} ∈ X_n` and 0 otherwise.
    pub diagonal_pattern: bool,
    /// Same two checks with `φ(σ)` and `σ ∈ X_n` read literally.
    pub literal_upper_triangular: bool,
    pub literal_diagonal_pattern: bool,
}

fn upper_triangular_in(m: &[Vec<Rational>], order: &[Permutation]) -> bool {
    let idx: Vec<usize> = order.iter().map(dense::rank).collect();
    idx.iter().enumerate().all(|(i, &r)| idx.iter().take(i).all(|&c| m[r][c].is_zero()))
}

fn diagonal_ok(m: &[Vec<Rational>], n: usize, inverse: bool) -> bool {
    Permutation::all(n).iter().all(|p| {
        let r = dense::rank(p);
        let q = if inverse { p.inverse() } else { p.clone() };
        let want = if consecutive_lr_min_stat(&q) == 0 { 1 } else { 0 };
        m[r][r] == int(want)
    })
}

pub fn s_sigma_sharp_matrix(n: usize) -> Result<SSigmaReport> {
    if n > S_SIGMA_MAX_N {
        return Err(Error::CostGuard { what: "s_sigma_sharp_matrix", n, limit: S_SIGMA_MAX_N });
    }
    let Some(conv) = selected_convention() else {
        return Ok(SSigmaReport {
            n,
            convention: None,
            order: Vec::new(),
            matrix: Vec::new(),
            upper_triangular: false,
            diagonal_pattern: false,
            literal_upper_triangular: false,
            literal_diagonal_pattern: false,
        });
    };
    let full = sharp_matrix_with(conv, n);
    let order = prime_order(n);
    let matrix =
        order.iter().map(|r| order.iter().map(|c| full[dense::rank(r)][dense::rank(c)].clone()).collect()).collect();
    Ok(SSigmaReport {
        n,
        convention: Some(conv.describe()),
        upper_triangular: upper_triangular_in(&full, &order),
        diagonal_pattern: diagonal_ok(&full, n, true),
        literal_upper_triangular: upper_triangular_in(&full, &literal_phi_order(n)),
        literal_diagonal_pattern: diagonal_ok(&full, n, false),
        order,
        matrix,
    })
}

impl SSigmaReport {
    pub fn verdict(&self) -> &'static str {
        verdict(self.convention.is_some(), self.upper_triangular && self.diagonal_pattern)
    }

    pub fn literal_verdict(&self) -> &'static str {
        verdict(self.convention.is_some(), self.literal_upper_triangular && self.literal_diagonal_pattern)
    }

    pub fn to_json(&self) -> Value {
        let labels: Vec<String> = self.order.iter().map(|p| p.to_string()).collect();
        let entries: Vec<Vec<String>> = self.matrix.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        json!({
            "n": self.n,
            "convention": self.convention,
            "verdict": self.verdict(),
            "upper_triangular": self.upper_triangular,
            "diagonal_pattern": self.diagonal_pattern,
            "literal_verdict": self.literal_verdict(),
            "literal_upper_triangular": self.literal_upper_triangular,
            "literal_diagonal_pattern": self.literal_diagonal_pattern,
            "labels": labels,
            "entries": entries,
        })
    }
}

fn verdict(resolved: bool, ok: bool) -> &'static str {
    match (resolved, ok) {
        (false, _) => "unresolved",
        (true, true) => "holds",
        (true, false) => "fails",
    }
}
