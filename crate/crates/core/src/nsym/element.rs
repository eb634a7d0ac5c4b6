//! Homogeneous noncommutative symmetric functions in the `S` and `R` bases.

use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::combinatorics::Composition;
use crate::exact::{LinComb, Rational};
use crate::{Error, Result};

/// Sparse combination over compositions; the basis is carried by [`NsfElement`].
pub type Nsf = LinComb<Composition>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NsfBasis {
    /// Complete products `S^I`.
    S,
    /// Ribbon functions `R_I`.
    R,
}

impl NsfBasis {
    pub fn tag(self) -> &'static str {
        match self {
            NsfBasis::S => "S",
            NsfBasis::R => "R",
        }
    }
}

/// A homogeneous element of `Sym_n`. Equality ignores the basis tag.
#[derive(Clone)]
pub struct NsfElement {
    degree: usize,
    basis: NsfBasis,
    terms: Nsf,
}

impl NsfElement {
    /// Panics if some index does not have weight `degree`.
    pub fn new(degree: usize, basis: NsfBasis, terms: Nsf) -> Self {
        assert!(terms.keys().all(|c| c.weight() == degree), "mixed degrees in homogeneous element");
        NsfElement { degree, basis, terms }
    }

    /// Infers the degree from the support (zero has degree 0).
    pub fn from_s(terms: Nsf) -> Self {
        let degree = terms.keys().next().map_or(0, |c| c.weight());
        Self::new(degree, NsfBasis::S, terms)
    }

    pub fn zero(degree: usize) -> Self {
        NsfElement { degree, basis: NsfBasis::S, terms: Nsf::zero() }
    }

    pub fn one() -> Self {
        Self::s(Composition::empty())
    }

    pub fn s(i: impl Into<Composition>) -> Self {
        let i = i.into();
        NsfElement { degree: i.weight(), basis: NsfBasis::S, terms: Nsf::basis(i) }
    }

    pub fn r(i: impl Into<Composition>) -> Self {
        let i = i.into();
        NsfElement { degree: i.weight(), basis: NsfBasis::R, terms: Nsf::basis(i) }
    }

    /// `S_n`.
    pub fn s_n(n: usize) -> Self {
        Self::s(Composition::single(n))
    }

    /// `S_1^n`.
    pub fn s1_pow(n: usize) -> Self {
        Self::s(Composition::ones(n))
    }

    /// `Λ_n = R_{1^n}`.
    pub fn lambda_n(n: usize) -> Self {
        Self::r(Composition::ones(n))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> NsfBasis {
        self.basis
    }

    pub fn terms(&self) -> &Nsf {
        &self.terms
    }

    pub fn coeff(&self, i: &Composition) -> Rational {
        self.terms.coeff(i)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn to_basis(&self, b: NsfBasis) -> Self {
        match (self.basis, b) {
            (x, y) if x == y => self.clone(),
            (NsfBasis::R, NsfBasis::S) => Self::new(self.degree, NsfBasis::S, r_to_s(&self.terms)),
            _ => Self::new(self.degree, NsfBasis::R, s_to_r(&self.terms)),
        }
    }

    pub fn to_s(&self) -> Self {
        self.to_basis(NsfBasis::S)
    }

    pub fn to_r(&self) -> Self {
        self.to_basis(NsfBasis::R)
    }

    /// The coefficients in the `S` basis.
    pub fn s_terms(&self) -> Nsf {
        self.to_s().terms
    }

    pub fn scale(&self, c: &Rational) -> Self {
        NsfElement { degree: self.degree, basis: self.basis, terms: self.terms.scale(c) }
    }

    /// Outer (graded) product.
    pub fn product(&self, other: &Self) -> Self {
        let t = outer(&self.s_terms(), &other.s_terms());
        Self::new(self.degree + other.degree, NsfBasis::S, t)
    }

    /// Internal product; zero when the degrees differ.
    pub fn internal_product(&self, other: &Self) -> Self {
        if self.degree != other.degree {
            return Self::zero(self.degree);
        }
        Self::new(self.degree, NsfBasis::S, internal(&self.s_terms(), &other.s_terms()))
    }

    /// Coproduct in the `S` basis, as a combination of pairs `S^I ⊗ S^J`.
    pub fn coproduct(&self) -> LinComb<(Composition, Composition)> {
        coproduct(&self.s_terms())
    }

    /// `{"basis":"S","degree":n,"terms":[{"index":[...],"num":..,"den":..}]}`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(i, c)| json!({"index": i.parts(), "num": int_json(c.numer()), "den": int_json(c.denom())}))
            .collect();
        json!({"basis": self.basis.tag(), "degree": self.degree, "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("nsf json: {m}"));
        let basis = match v.get("basis").and_then(Value::as_str) {
            Some("S") => NsfBasis::S,
            Some("R") => NsfBasis::R,
            _ => return Err(bad("basis")),
        };
        let degree = v.get("degree").and_then(Value::as_u64).ok_or_else(|| bad("degree"))? as usize;
        let mut terms = Nsf::zero();
        for t in v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("terms"))? {
            let idx: Vec<usize> = t
                .get("index")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("index"))?
                .iter()
                .map(|x| x.as_u64().map(|y| y as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| bad("index entry"))?;
            let num = json_int(t.get("num").ok_or_else(|| bad("num"))?)?;
            let den = json_int(t.get("den").ok_or_else(|| bad("den"))?)?;
            if den.is_zero() {
                return Err(bad("zero denominator"));
            }
            let comp = Composition::try_new(idx)?;
            if comp.weight() != degree {
                return Err(bad("index weight"));
            }
            terms.add_term(comp, Rational::new(num, den));
        }
        Ok(Self::new(degree, basis, terms))
    }
}

pub(crate) fn int_json(x: &num_bigint::BigInt) -> Value {
    use num_traits::ToPrimitive;
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub(crate) fn json_int(v: &Value) -> Result<num_bigint::BigInt> {
    if let Some(i) = v.as_i64() {
        return Ok(i.into());
    }
    v.as_str().and_then(|s| s.parse().ok()).ok_or_else(|| Error::Parse(format!("not an integer: {v}")))
}

impl std::ops::Add for &NsfElement {
    type Output = NsfElement;
    fn add(self, rhs: &NsfElement) -> NsfElement {
        if self.basis == rhs.basis {
            NsfElement::new(self.degree.max(rhs.degree), self.basis, &self.terms + &rhs.terms)
        } else {
            &self.to_s() + &rhs.to_s()
        }
    }
}

impl std::ops::Sub for &NsfElement {
    type Output = NsfElement;
    fn sub(self, rhs: &NsfElement) -> NsfElement {
        if self.basis == rhs.basis {
            NsfElement::new(self.degree.max(rhs.degree), self.basis, &self.terms - &rhs.terms)
        } else {
            &self.to_s() - &rhs.to_s()
        }
    }
}

impl PartialEq for NsfElement {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree
            && (self.basis == other.basis && self.terms == other.terms || self.s_terms() == other.s_terms())
    }
}

impl Eq for NsfElement {}

impl PartialEq<Nsf> for NsfElement {
    fn eq(&self, other: &Nsf) -> bool {
        self.s_terms() == *other
    }
}

impl fmt::Debug for NsfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Human-readable form such as `S[3] - S[2,1] + 1/3 S[1,1,1]`.
impl fmt::Display for NsfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_terms(&self.terms, self.basis.tag()))
    }
}

pub(crate) fn format_terms(t: &Nsf, tag: &str) -> String {
    use num_traits::Signed;
    if t.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, (i, c)) in t.iter().enumerate() {
        let idx: Vec<String> = i.parts().iter().map(|p| p.to_string()).collect();
        let mon = format!("{tag}[{}]", idx.join(","));
        let a = c.abs();
        let sign = if c.is_negative() { "-" } else { "+" };
        if k == 0 {
            if c.is_negative() {
                s.push('-');
            }
        } else {
            s.push_str(&format!(" {sign} "));
        }
        if a.is_one() {
            s.push_str(&mon);
        } else {
            s.push_str(&format!("{a} {mon}"));
        }
    }
    s
}

/// `R_I = Σ_{J coarser than I} (-1)^{ℓ(I)-ℓ(J)} S^J`.
pub fn r_to_s(t: &Nsf) -> Nsf {
    t.map_linear(|i| {
        i.coarsenings()
            .into_iter()
            .map(|j| {
                let sign = if (i.len() - j.len()) % 2 == 0 { Rational::one() } else { -Rational::one() };
                (j, sign)
            })
            .collect()
    })
}

/// Inverse of [`r_to_s`]: `S^I = Σ_{J coarser than I} R_J`.
pub fn s_to_r(t: &Nsf) -> Nsf {
    t.map_linear(|i| i.coarsenings().into_iter().map(|j| (j, Rational::one())).collect())
}

/// Outer product in the `S` basis (concatenation).
pub fn outer(a: &Nsf, b: &Nsf) -> Nsf {
    a.bilinear(b, |i, j| Nsf::basis(i.concat(j)))
}

pub use super::internal::internal;

/// `ΔS^I = Π_k Σ_{a+b=i_k} S_a ⊗ S_b`.
pub fn coproduct(t: &Nsf) -> LinComb<(Composition, Composition)> {
    t.map_linear(|i| {
        let mut acc: Vec<(Vec<usize>, Vec<usize>)> = vec![(Vec::new(), Vec::new())];
        for &p in i.parts() {
            let mut next = Vec::with_capacity(acc.len() * (p + 1));
            for (l, r) in &acc {
                for a in 0..=p {
                    let (mut l2, mut r2) = (l.clone(), r.clone());
                    if a > 0 {
                        l2.push(a);
                    }
                    if a < p {
                        r2.push(p - a);
                    }
                    next.push((l2, r2));
                }
            }
            acc = next;
        }
        acc.into_iter().map(|(l, r)| ((Composition::new(l), Composition::new(r)), Rational::one())).collect()
    })
}

/// `x ⊗ 1 + 1 ⊗ x` for a homogeneous `x` of positive degree.
pub fn primitive_coproduct(t: &Nsf) -> LinComb<(Composition, Composition)> {
    let mut out = LinComb::zero();
    for (i, c) in t.iter() {
        out.add_term((i.clone(), Composition::empty()), c.clone());
        out.add_term((Composition::empty(), i.clone()), c.clone());
    }
    out
}

pub fn is_primitive(t: &Nsf) -> bool {
    coproduct(t) == primitive_coproduct(t)
}
