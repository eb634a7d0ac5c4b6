//! `F^♯ = F * σ_1^♯` in `W`, with `σ_1^♯ = e^{-N_1} Σ_n N_{1^n}`.

use num_traits::One;

use crate::combinatorics::PackedWord;
use crate::exact::{modp::ModEchelon, Rational};
use crate::{Error, Result};

use super::dense::{to_mod, Table, TABLE_MAX_N};
use super::element::WqsymElement;

/// Degree `n` part of `e^{-N_1} Σ N_{1^k}`, computed with the outer product of `W`.
pub fn sigma1_sharp(n: usize) -> WqsymElement {
    let n1 = WqsymElement::identity(1);
    let mut out = WqsymElement::zero(n);
    let mut pow = WqsymElement::identity(0);
    let mut fact = Rational::one();
    for i in 0..=n {
        if i > 0 {
            pow = pow.product(&n1);
            fact *= Rational::from_integer(i.into());
        }
        let sign = if i % 2 == 0 { Rational::one() } else { -Rational::one() };
        let term = pow.product(&WqsymElement::identity(n - i));
        out = &out + &term.scale(&(sign / &fact));
    }
    out
}

/// `D_n = N_{1^n}^♯`.
pub fn d_n(n: usize) -> WqsymElement {
    sigma1_sharp(n)
}

pub fn sharp(x: &WqsymElement) -> WqsymElement {
    x.internal_product(&sigma1_sharp(x.degree()))
}

/// Packed words of length `n` with no letter occurring exactly once.
pub fn non_unitary_words(n: usize) -> Vec<PackedWord> {
    PackedWord::all(n).into_iter().filter(|u| u.is_non_unitary()).collect()
}

/// `N_u^♯` for `u` non-unitary.
pub fn sharp_basis(n: usize) -> Vec<(PackedWord, WqsymElement)> {
    let s = sigma1_sharp(n);
    non_unitary_words(n).into_iter().map(|u| (u.clone(), WqsymElement::n(u).internal_product(&s))).collect()
}

#[derive(Clone, Debug)]
pub struct SharpRanks {
    pub n: usize,
    /// Rank of `{N_u^♯}` over all packed words `u`.
    pub image_rank: usize,
    /// Rank of `{N_u^♯ : u non-unitary}`.
    pub basis_rank: usize,
    pub non_unitary: usize,
}

/// Ranks mod `p` (lower bounds for the rational ranks).
pub fn sharp_ranks(n: usize) -> Result<SharpRanks> {
    if n > TABLE_MAX_N {
        return Err(Error::CostGuard { what: "wqsym sharp ranks", n, limit: TABLE_MAX_N });
    }
    let t = Table::new(n)?;
    let (_, s) = t.element_vector(&sigma1_sharp(n));
    let mut all = ModEchelon::new(t.len());
    let mut basis = ModEchelon::new(t.len());
    let mut non_unitary = 0;
    for (i, u) in t.words.iter().enumerate() {
        let mut e = vec![0i128; t.len()];
        e[i] = 1;
        let v = to_mod(&t.mul(&e, &s));
        if u.is_non_unitary() {
            non_unitary += 1;
            basis.insert(v.clone());
        }
        all.insert(v);
    }
    Ok(SharpRanks { n, image_rank: all.rank(), basis_rank: basis.rank(), non_unitary })
}
