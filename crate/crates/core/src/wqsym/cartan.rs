//! `q`-Cartan matrices of `W_n` and `W_n^♯` over set partitions.
//!
//! Same layout as the descent algebra matrices: `c_{α,β}(q) = dim e_β * W_n * e_α`
//! in degree `l(α) - l(β)` sits in row `β`, column `α`, and labels run from
//! coarse to fine so the matrix is upper triangular.

use num_traits::Zero;
use rayon::prelude::*;

use crate::combinatorics::SetPartition;
use crate::descent_rep::CartanMatrix;
use crate::exact::{QPoly, Rational};
use crate::{Error, Result};

use super::dense::{Table, TABLE_MAX_N};
use super::saliola::{saliola_idempotents, SaliolaMode};

pub const CARTAN_FORMULA_MAX_N: usize = 7;

pub type WCartan = CartanMatrix<SetPartition>;

/// Set partitions of `[n]` by increasing number of blocks, then lexicographically.
pub fn labels(n: usize, non_unitary_only: bool) -> Vec<SetPartition> {
    let mut v: Vec<SetPartition> =
        SetPartition::all(n).into_iter().filter(|p| !non_unitary_only || p.is_non_unitary()).collect();
    v.sort_by(|a, b| a.num_blocks().cmp(&b.num_blocks()).then_with(|| a.cmp(b)));
    v
}

/// `Π_i (m_i - 1)!` over the blocks `B_i` of `β`, `m_i` the number of blocks of
/// `α` inside `B_i`; zero unless `α` refines `β`.
pub fn cartan_invariant(alpha: &SetPartition, beta: &SetPartition) -> u64 {
    if !alpha.refines(beta) {
        return 0;
    }
    beta.blocks()
        .iter()
        .map(|b| {
            let m = alpha.blocks().iter().filter(|a| b.contains(&a[0])).count() as u64;
            (1..m).product::<u64>()
        })
        .product()
}

pub fn cartan_wqsym(n: usize, restricted_to_sharp: bool) -> Result<WCartan> {
    if n > CARTAN_FORMULA_MAX_N {
        return Err(Error::CostGuard { what: "cartan_wqsym", n, limit: CARTAN_FORMULA_MAX_N });
    }
    let labels = labels(n, restricted_to_sharp);
    let entries = labels
        .iter()
        .map(|beta| {
            labels
                .iter()
                .map(|alpha| match cartan_invariant(alpha, beta) {
                    0 => QPoly::zero(),
                    c => QPoly::monomial(
                        (alpha.num_blocks() - beta.num_blocks()) as u32,
                        Rational::from_integer(c.into()),
                    ),
                })
                .collect()
        })
        .collect();
    Ok(CartanMatrix { labels, entries })
}

/// Arrows `α -> β` with `β` obtained from `α` by merging two blocks.
pub fn quiver_arrows(labels: &[SetPartition]) -> Vec<(SetPartition, SetPartition)> {
    let mut out = Vec::new();
    for a in labels {
        let bs = a.blocks();
        for i in 0..bs.len() {
            for j in i + 1..bs.len() {
                let mut blocks: Vec<Vec<usize>> =
                    bs.iter().enumerate().filter(|&(k, _)| k != i && k != j).map(|(_, b)| b.clone()).collect();
                blocks.push(bs[i].iter().chain(&bs[j]).copied().collect());
                let b = SetPartition::new(blocks);
                if labels.contains(&b) {
                    out.push((a.clone(), b));
                }
            }
        }
    }
    out.sort();
    out
}

/// `dim e_α * W_n * e_β` for the Saliola idempotents, as the trace of the
/// idempotent map `x ↦ e_α * x * e_β`.
///
/// The coefficient of `N_u` in `N_w * N_u * N_v` is 1 exactly when
/// `pack(w, u) = u` and `pack(u, v) = u`, so the trace is
/// `Σ_u A_α(u) B_β(u)` with `A_α(u) = Σ_{pack(w,u)=u} e_α[w]` and
/// `B_β(u) = Σ_{pack(u,v)=u} e_β[v]`. Indexed `[α][β]` in `labels(n, false)` order.
pub fn sandwich_dimensions(n: usize) -> Result<Vec<Vec<u64>>> {
    if n > TABLE_MAX_N {
        return Err(Error::CostGuard { what: "sandwich_dimensions", n, limit: TABLE_MAX_N });
    }
    let t = Table::new(n)?;
    let ids = saliola_idempotents(n, SaliolaMode::Direct)?;
    let labels = labels(n, false);
    let sparse: Vec<Vec<(usize, Rational)>> =
        labels.iter().map(|p| ids[p].terms().iter().map(|(u, c)| (t.index(u), c.clone())).collect()).collect();
    let len = t.len();
    let left: Vec<Vec<Rational>> = sparse
        .par_iter()
        .map(|e| {
            (0..len).map(|u| e.iter().filter(|(w, _)| t.product(*w, u) == u).map(|(_, c)| c.clone()).sum()).collect()
        })
        .collect();
    let right: Vec<Vec<Rational>> = sparse
        .par_iter()
        .map(|e| {
            (0..len).map(|u| e.iter().filter(|(v, _)| t.product(u, *v) == u).map(|(_, c)| c.clone()).sum()).collect()
        })
        .collect();
    let mut out = vec![vec![0u64; labels.len()]; labels.len()];
    for (a, row) in out.iter_mut().enumerate() {
        for (b, slot) in row.iter_mut().enumerate() {
            let tr: Rational = (0..len).map(|u| &left[a][u] * &right[b][u]).sum();
            if !tr.is_integer() || tr < Rational::zero() {
                return Err(Error::Consistency(format!("trace of an idempotent map is {tr}")));
            }
            *slot = tr.to_integer().try_into().map_err(|_| Error::Consistency("dimension overflow".into()))?;
        }
    }
    Ok(out)
}

/// The formula at `q = 1`, indexed `[α][β]` like [`sandwich_dimensions`].
pub fn formula_dimensions(n: usize) -> Vec<Vec<u64>> {
    let labels = labels(n, false);
    labels.iter().map(|a| labels.iter().map(|b| cartan_invariant(a, b)).collect()).collect()
}

/// Whether `c_{α,β}` equals `dim e_α * W * e_β`, and whether it equals
/// `dim e_β * W * e_α`, for every pair.
pub fn check_cartan_orientation(n: usize) -> Result<(bool, bool)> {
    let s = sandwich_dimensions(n)?;
    let f = formula_dimensions(n);
    let k = f.len();
    let direct = (0..k).all(|a| (0..k).all(|b| s[a][b] == f[a][b]));
    let transposed = (0..k).all(|a| (0..k).all(|b| s[b][a] == f[a][b]));
    Ok((direct, transposed))
}
