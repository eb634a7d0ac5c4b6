//! The `♯` transform and the derangement algebras `D^(k)`.

use num_bigint::BigInt;

use super::element::{outer, Nsf, NsfBasis, NsfElement};
use super::series::s_sharp;
use crate::combinatorics::Composition;
use crate::exact::rational::factorial;
use crate::exact::Rational;

/// `F^♯ = F * S_n^♯`.
pub fn sharp(x: &NsfElement) -> NsfElement {
    x.internal_product(&s_sharp(x.degree()))
}

/// `(S^I)^♯`.
pub fn s_sharp_of(i: &Composition) -> NsfElement {
    sharp(&NsfElement::s(i.clone()))
}

/// `S_1^k / k! · f`.
pub fn s1_divided(k: usize, f: &NsfElement) -> NsfElement {
    let c = Rational::new(BigInt::from(1), factorial(k));
    let t = outer(&Nsf::basis(Composition::ones(k)), &f.s_terms()).scale(&c);
    NsfElement::new(k + f.degree(), NsfBasis::S, t)
}

/// `D_{n,k} = S_1^k/k! S_{n-k}^♯`.
pub fn d_nk(n: usize, k: usize) -> NsfElement {
    assert!(k <= n);
    s1_divided(k, &s_sharp(n - k))
}

/// `P_n^(k) = Σ_{i <= min(k,n)} D_{n,i}`; `None` means `k = ∞`.
pub fn neutral_p(n: usize, k: Option<usize>) -> NsfElement {
    let top = k.map_or(n, |k| k.min(n));
    (0..=top).fold(NsfElement::zero(n), |acc, i| &acc + &d_nk(n, i))
}

/// Basis `{S_1^j (S^I)^♯ : j <= k, I ⊨ n-j, 1 ∉ I}` of `D_n^(k)`; `None` means `k = ∞`.
pub fn derangement_algebra_basis(n: usize, k: Option<usize>) -> Vec<NsfElement> {
    let top = k.map_or(n, |k| k.min(n));
    let mut out = Vec::new();
    for j in 0..=top {
        for i in Composition::all(n - j) {
            if i.has_part(1) {
                continue;
            }
            let t = outer(&Nsf::basis(Composition::ones(j)), &s_sharp_of(&i).s_terms());
            out.push(NsfElement::new(n, NsfBasis::S, t));
        }
    }
    out
}

/// Number of compositions of `m` with no part 1 (`d_m^(0)`).
pub fn d0_dim(m: usize) -> u64 {
    let (mut a, mut b) = (1u64, 0u64); // values at 0 and 1
    if m == 0 {
        return 1;
    }
    for _ in 1..m {
        let c = a + b;
        a = b;
        b = c;
    }
    b
}

/// `d_n^(k) = Σ_{j <= min(n,k)} d_{n-j}^(0)`.
pub fn dnk_dim(n: usize, k: Option<usize>) -> u64 {
    let top = k.map_or(n, |k| k.min(n));
    (0..=top).map(|j| d0_dim(n - j)).sum()
}
