//! `FQSym` on the `F` and `G` bases; the internal product is the group algebra
//! product `F_σ * F_τ = F_{στ}`.

use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::combinatorics::{shuffle, Composition, Permutation};
use crate::exact::{LinComb, Rational};
use crate::nsym::{Nsf, NsfBasis, NsfElement};

pub type Fq = LinComb<Permutation>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FqsymBasis {
    F,
    /// `G_σ = F_{σ^{-1}}`.
    G,
}

impl FqsymBasis {
    pub fn tag(self) -> &'static str {
        match self {
            FqsymBasis::F => "F",
            FqsymBasis::G => "G",
        }
    }
}

/// A homogeneous element of `FQSym_n`.
#[derive(Clone, PartialEq, Eq)]
pub struct FqsymElement {
    degree: usize,
    basis: FqsymBasis,
    terms: Fq,
}

impl FqsymElement {
    pub fn new(degree: usize, basis: FqsymBasis, terms: Fq) -> Self {
        assert!(terms.keys().all(|p| p.len() == degree), "mixed degrees in homogeneous element");
        FqsymElement { degree, basis, terms }
    }

    pub fn zero(degree: usize, basis: FqsymBasis) -> Self {
        Self::new(degree, basis, Fq::zero())
    }

    pub fn f(p: Permutation) -> Self {
        FqsymElement { degree: p.len(), basis: FqsymBasis::F, terms: Fq::basis(p) }
    }

    pub fn g(p: Permutation) -> Self {
        FqsymElement { degree: p.len(), basis: FqsymBasis::G, terms: Fq::basis(p) }
    }

    /// `F_{12...n}`, the unit of `*`.
    pub fn identity(n: usize) -> Self {
        Self::f(Permutation::identity(n))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> FqsymBasis {
        self.basis
    }

    pub fn terms(&self) -> &Fq {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn coeff(&self, p: &Permutation) -> Rational {
        self.terms.coeff(p)
    }

    pub fn to_basis(&self, b: FqsymBasis) -> Self {
        if self.basis == b {
            return self.clone();
        }
        Self::new(self.degree, b, self.terms.map_keys(|p| p.inverse()))
    }

    pub fn to_f(&self) -> Self {
        self.to_basis(FqsymBasis::F)
    }

    pub fn to_g(&self) -> Self {
        self.to_basis(FqsymBasis::G)
    }

    pub fn f_terms(&self) -> Fq {
        self.to_f().terms
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.degree, self.basis, self.terms.scale(c))
    }

    /// Internal product; zero when degrees differ.
    pub fn internal_product(&self, other: &Self) -> Self {
        if self.degree != other.degree {
            return Self::zero(self.degree, FqsymBasis::F);
        }
        Self::new(self.degree, FqsymBasis::F, internal_f(&self.f_terms(), &other.f_terms()))
    }

    /// Outer product (shifted shuffle in the `F` basis).
    pub fn product(&self, other: &Self) -> Self {
        let t = self.f_terms().bilinear(&other.f_terms(), shifted_shuffle);
        Self::new(self.degree + other.degree, FqsymBasis::F, t)
    }

    /// `ΔF_σ = Σ_i F_{std(σ_1..σ_i)} ⊗ F_{std(σ_{i+1}..σ_n)}`.
    pub fn coproduct(&self) -> LinComb<(Permutation, Permutation)> {
        self.f_terms().map_linear(|p| {
            let w = p.word();
            (0..=w.len())
                .map(|i| ((Permutation::standardize(&w[..i]), Permutation::standardize(&w[i..])), Rational::one()))
                .collect()
        })
    }

    /// Coefficient sum of the identity permutation (trace up to `n!`).
    pub fn identity_coeff(&self) -> Rational {
        self.terms.coeff(&Permutation::identity(self.degree))
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(p, c)| {
                json!({"index": p.word(), "num": crate::nsym::element::int_json(c.numer()),
                       "den": crate::nsym::element::int_json(c.denom())})
            })
            .collect();
        json!({"basis": self.basis.tag(), "degree": self.degree, "terms": terms})
    }
}

impl std::ops::Add for &FqsymElement {
    type Output = FqsymElement;
    fn add(self, rhs: &FqsymElement) -> FqsymElement {
        let a = self.to_f();
        let b = rhs.to_f();
        FqsymElement::new(a.degree.max(b.degree), FqsymBasis::F, &a.terms + &b.terms)
    }
}

impl std::ops::Sub for &FqsymElement {
    type Output = FqsymElement;
    fn sub(self, rhs: &FqsymElement) -> FqsymElement {
        let a = self.to_f();
        let b = rhs.to_f();
        FqsymElement::new(a.degree.max(b.degree), FqsymBasis::F, &a.terms - &b.terms)
    }
}

impl fmt::Debug for FqsymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{:?}", self.basis.tag(), self.terms)
    }
}

/// Group algebra product on `F` coefficients.
pub fn internal_f(a: &Fq, b: &Fq) -> Fq {
    if a.len() * b.len() > 4096 {
        return internal_f_dense(a, b);
    }
    a.bilinear(b, |s, t| Fq::basis(s.compose(t)))
}

/// Same product through dense coefficient tables indexed by rank.
fn internal_f_dense(a: &Fq, b: &Fq) -> Fq {
    use rayon::prelude::*;
    let ca: Vec<(&Permutation, &Rational)> = a.iter().collect();
    let cb: Vec<(&Permutation, &Rational)> = b.iter().collect();
    let chunks: Vec<std::collections::HashMap<Vec<usize>, Rational>> = ca
        .par_chunks(16)
        .map(|chunk| {
            let mut acc: std::collections::HashMap<Vec<usize>, Rational> = std::collections::HashMap::new();
            for (s, x) in chunk {
                for (t, y) in &cb {
                    let w: Vec<usize> = t.word().iter().map(|&i| s.word()[i - 1]).collect();
                    *acc.entry(w).or_insert_with(Rational::zero) += *x * *y;
                }
            }
            acc
        })
        .collect();
    let mut out = Fq::zero();
    for m in chunks {
        for (w, c) in m {
            out.add_term(Permutation::new(w), c);
        }
    }
    out
}

/// `σ ⧢ τ[|σ|]` as a sum of `F`'s.
pub fn shifted_shuffle(a: &Permutation, b: &Permutation) -> Fq {
    let shifted = b.shifted(a.len());
    shuffle(a.word(), &shifted).into_iter().map(|w| (Permutation::new(w), Rational::one())).collect()
}

/// Permutations whose descent set is contained in `Des(I)`.
pub fn descent_class_below(i: &Composition) -> Vec<Permutation> {
    let n = i.weight();
    let mask = i.descent_mask();
    Permutation::all(n).into_iter().filter(|p| p.descent_mask() & !mask == 0).collect()
}

/// `S^I ↦ Σ_{Des(σ) ⊆ Des(I)} G_σ`, returned in the `F` basis.
pub fn embed_s(i: &Composition) -> Fq {
    descent_class_below(i).into_iter().map(|p| (p.inverse(), Rational::one())).collect()
}

/// `R_I ↦ Σ_{Des(σ) = Des(I)} G_σ`, returned in the `F` basis.
pub fn embed_r(i: &Composition) -> Fq {
    let n = i.weight();
    let mask = i.descent_mask();
    Permutation::all(n)
        .into_iter()
        .filter(|p| p.descent_mask() == mask)
        .map(|p| (p.inverse(), Rational::one()))
        .collect()
}

/// The embedding of `Sym` into `FQSym` (`S_n ↦ G_{12...n}`).
pub fn embed(x: &NsfElement) -> FqsymElement {
    let t = match x.basis() {
        NsfBasis::S => x.terms().map_linear(embed_s),
        NsfBasis::R => x.terms().map_linear(embed_r),
    };
    FqsymElement::new(x.degree(), FqsymBasis::F, t)
}

/// Inverse of [`embed`] on its image; `None` if `x` is not in the image.
pub fn project(x: &FqsymElement) -> Option<NsfElement> {
    let g = x.to_g();
    let n = x.degree();
    let mut by_mask: std::collections::BTreeMap<u64, Rational> = std::collections::BTreeMap::new();
    for p in Permutation::all(n) {
        let c = g.coeff(&p);
        match by_mask.get(&p.descent_mask()) {
            Some(prev) if *prev != c => return None,
            Some(_) => {}
            None => {
                by_mask.insert(p.descent_mask(), c);
            }
        }
    }
    let r: Nsf = by_mask.into_iter().map(|(m, c)| (Composition::from_descent_mask(n, m), c)).collect();
    Some(NsfElement::new(n, NsfBasis::R, r).to_s())
}
