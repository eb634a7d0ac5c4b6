//! `F_σ^♯ = F_σ * σ_1^♯` and dimensions of right ideals.

use crate::combinatorics::Permutation;
use crate::exact::{modp, rational::factorial, Rational};
use crate::nsym::s_sharp;
use crate::{Error, Result};

use super::dense::{self, Table};
use super::element::{embed, FqsymElement};

/// The degree `n` component of `σ_1^♯`, embedded.
pub fn sigma1_sharp(n: usize) -> FqsymElement {
    embed(&s_sharp(n))
}

pub fn sharp(x: &FqsymElement) -> FqsymElement {
    x.internal_product(&sigma1_sharp(x.degree()))
}

/// `n! · [F_{12...n}] e`: the dimension of the right ideal generated by a `*`-idempotent `e`.
pub fn trace_dimension(e: &FqsymElement) -> Rational {
    e.identity_coeff() * Rational::from_integer(factorial(e.degree()))
}

/// `F_σ^♯` for all `σ`, as dense vectors mod `p` sharing one scale factor.
pub(crate) fn sharp_images_mod(t: &Table) -> Vec<Vec<u64>> {
    let n = t.perms.first().map_or(0, |p| p.len());
    let (_, e) = dense::integer_vector(t, &sigma1_sharp(n).f_terms());
    let e = dense::to_mod(&e);
    (0..t.len()).map(|s| dense::left_translate_mod(t, s, &e)).collect()
}

pub const SHARP_RANK_MAX_N: usize = 7;

/// Rank of `{F_σ^♯ : σ ∈ S_n}`, computed mod `p`.
pub fn sharp_rank(n: usize) -> Result<usize> {
    if n > SHARP_RANK_MAX_N {
        return Err(Error::CostGuard { what: "sharp rank", n, limit: SHARP_RANK_MAX_N });
    }
    let t = Table::new(n);
    let imgs = sharp_images_mod(&t);
    Ok(modp::rank(t.len(), imgs))
}

/// `(F_σ' * S^{γ_n})` for `σ'` the rotation of `σ` used to reduce `F_σ^♯`.
pub fn gamma_translate(sigma: &Permutation) -> FqsymElement {
    FqsymElement::f(sigma.clone()).internal_product(&super::tsetlin::t_n(sigma.len()))
}
