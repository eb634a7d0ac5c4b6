//! The basis `{F_σ^♯ : σ ∈ X_n}` of `FQSym_n^♯`.

use num_traits::ToPrimitive;

use crate::combinatorics::foata::{consecutive_lr_min_stat, x_set};
use crate::combinatorics::Permutation;
use crate::exact::{modp::ModEchelon, Rational};
use crate::{Error, Result};

use super::dense::{self, Table};
use super::element::FqsymElement;
use super::sharp::{gamma_translate, sharp, sharp_images_mod, sigma1_sharp, trace_dimension};

pub const X_BASIS_MAX_N: usize = 7;

#[derive(Clone, Debug)]
pub struct XBasisReport {
    pub n: usize,
    pub elements: Vec<(Permutation, FqsymElement)>,
    /// Rank of the family, computed mod `p` (a lower bound for the rational rank).
    pub rank: usize,
    /// `dim FQSym_n^♯`, from the trace of the idempotent `σ_1^♯`.
    pub sharp_dim: u64,
    pub independent: bool,
    pub spanning: bool,
    /// Permutations of `Y_n` where the reduction step fails.
    pub fy_failures: Vec<Permutation>,
}

/// First pair of adjacent left-right minima of `σ·0`, as the 0-based index of
/// the first one.
fn first_adjacent_lr_minima(sigma: &Permutation) -> Option<usize> {
    let mut w = sigma.word().to_vec();
    w.push(0);
    let mut min = usize::MAX;
    let mut is_min = Vec::with_capacity(w.len());
    for &x in &w {
        is_min.push(x < min);
        min = min.min(x);
    }
    (0..w.len() - 1).find(|&i| is_min[i] && is_min[i + 1])
}

/// `σ'`: the letter `σ_i` moved to the front.
pub fn fy_rotation(sigma: &Permutation) -> Option<Permutation> {
    let i = first_adjacent_lr_minima(sigma)?;
    let w = sigma.word();
    let mut out = vec![w[i]];
    out.extend(w.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x));
    Some(Permutation::new(out))
}

/// `F_{σ'} * S^{γ_n}` has `F_σ` as its lexicographically largest term, with coefficient 1.
pub fn fy_holds(sigma: &Permutation) -> bool {
    let Some(rot) = fy_rotation(sigma) else {
        return false;
    };
    let y = gamma_translate(&rot).f_terms();
    y.max_key() == Some(sigma) && y.coeff(sigma) == Rational::from_integer(1.into())
}

pub fn x_basis(n: usize) -> Result<XBasisReport> {
    if n > X_BASIS_MAX_N {
        return Err(Error::CostGuard { what: "x_basis", n, limit: X_BASIS_MAX_N });
    }
    let t = Table::new(n);
    let xs = x_set(n, Some(0));
    let imgs = sharp_images_mod(&t);
    let mut ech = ModEchelon::new(t.len());
    for s in &xs {
        ech.insert(imgs[dense::rank(s)].clone());
    }
    let rank = ech.rank();
    let sharp_dim = trace_dimension(&sigma1_sharp(n)).to_integer().to_u64().expect("dimension fits");
    let elements = xs.iter().map(|s| (s.clone(), sharp(&FqsymElement::f(s.clone())))).collect();
    let fy_failures =
        Permutation::all(n).into_iter().filter(|s| consecutive_lr_min_stat(s) > 0).filter(|s| !fy_holds(s)).collect();
    Ok(XBasisReport {
        n,
        elements,
        rank,
        sharp_dim,
        independent: rank == xs.len(),
        spanning: rank as u64 == sharp_dim,
        fy_failures,
    })
}
