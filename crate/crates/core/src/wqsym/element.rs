//! `WQSym^*` on the `N` basis, with `N_u * N_v = N_{pack(u,v)}`.

use std::fmt;

use num_traits::One;
use serde_json::{json, Value};

use crate::combinatorics::{pack_biword, shuffle, Composition, PackedWord};
use crate::exact::{LinComb, Rational};
use crate::nsym::NsfElement;

pub type Wq = LinComb<PackedWord>;

/// A homogeneous element of `W_n`.
#[derive(Clone, PartialEq, Eq)]
pub struct WqsymElement {
    degree: usize,
    terms: Wq,
}

impl WqsymElement {
    pub fn new(degree: usize, terms: Wq) -> Self {
        assert!(terms.keys().all(|u| u.len() == degree), "mixed degrees in homogeneous element");
        WqsymElement { degree, terms }
    }

    pub fn zero(degree: usize) -> Self {
        WqsymElement { degree, terms: Wq::zero() }
    }

    pub fn n(u: PackedWord) -> Self {
        WqsymElement { degree: u.len(), terms: Wq::basis(u) }
    }

    /// `N_{1^n} = S_n`, the unit of `*`.
    pub fn identity(n: usize) -> Self {
        Self::n(PackedWord::ones(n))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &Wq {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn coeff(&self, u: &PackedWord) -> Rational {
        self.terms.coeff(u)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.degree, self.terms.scale(c))
    }

    /// Internal product; zero when degrees differ.
    pub fn internal_product(&self, other: &Self) -> Self {
        if self.degree != other.degree {
            return Self::zero(self.degree);
        }
        let t = self
            .terms
            .bilinear(&other.terms, |u, v| Wq::basis(pack_biword(u.word(), v.word()).expect("equal lengths")));
        Self::new(self.degree, t)
    }

    /// Outer product: `N_u N_v` is the sum of `N_w` over the shuffles `w` of `u`
    /// with `v` shifted by `max(u)`.
    pub fn product(&self, other: &Self) -> Self {
        let t = self.terms.bilinear(&other.terms, |u, v| {
            let k = u.max_letter();
            let shifted: Vec<usize> = v.word().iter().map(|x| x + k).collect();
            shuffle(u.word(), &shifted).into_iter().map(|w| (PackedWord::new(w), Rational::one())).collect()
        });
        Self::new(self.degree + other.degree, t)
    }

    /// Drops the words with a letter occurring exactly once: the image in `W / J`.
    pub fn project_mod_j(&self) -> Self {
        Self::new(self.degree, self.terms.filter(|u| u.is_non_unitary()))
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(u, c)| {
                json!({"index": u.word(), "num": crate::nsym::element::int_json(c.numer()),
                       "den": crate::nsym::element::int_json(c.denom())})
            })
            .collect();
        json!({"basis": "N", "degree": self.degree, "terms": terms})
    }
}

impl std::ops::Add for &WqsymElement {
    type Output = WqsymElement;
    fn add(self, rhs: &WqsymElement) -> WqsymElement {
        WqsymElement::new(self.degree.max(rhs.degree), &self.terms + &rhs.terms)
    }
}

impl std::ops::Sub for &WqsymElement {
    type Output = WqsymElement;
    fn sub(self, rhs: &WqsymElement) -> WqsymElement {
        WqsymElement::new(self.degree.max(rhs.degree), &self.terms - &rhs.terms)
    }
}

impl fmt::Debug for WqsymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N:{:?}", self.terms)
    }
}

/// `S^I = Σ_{ev(u) = I} N_u`.
pub fn embed_s(i: &Composition) -> Wq {
    PackedWord::with_evaluation(i).into_iter().map(|u| (u, Rational::one())).collect()
}

pub fn embed(x: &NsfElement) -> WqsymElement {
    WqsymElement::new(x.degree(), x.s_terms().map_linear(embed_s))
}
