//! Commutative symmetric functions in the power-sum basis.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::combinatorics::{Partition, Permutation};
use crate::exact::qfactorial;
use crate::exact::{LinComb, QPoly, Rational};
use crate::fqsym::{embed, FqsymElement};
use crate::nsym::NsfElement;
use crate::Result;

/// A homogeneous symmetric function `Σ c_λ p_λ`.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    degree: usize,
    terms: LinComb<Partition>,
}

impl SymFunc {
    pub fn new(degree: usize, terms: LinComb<Partition>) -> Self {
        assert!(terms.keys().all(|l| l.weight() == degree), "mixed degrees");
        SymFunc { degree, terms }
    }

    pub fn zero(degree: usize) -> Self {
        SymFunc { degree, terms: LinComb::zero() }
    }

    pub fn one() -> Self {
        Self::p(Partition::empty())
    }

    pub fn p(lam: Partition) -> Self {
        SymFunc { degree: lam.weight(), terms: LinComb::basis(lam) }
    }

    pub fn p_n(n: usize) -> Self {
        Self::p(Partition::new(vec![n]))
    }

    /// `h_n = Σ_λ p_λ / z_λ`.
    pub fn h(n: usize) -> Self {
        let t = Partition::all(n).into_iter().map(|l| {
            let z = Rational::new(BigInt::one(), l.z_lambda());
            (l, z)
        });
        SymFunc { degree: n, terms: t.collect() }
    }

    /// `e_n = Σ_λ ε_λ p_λ / z_λ`.
    pub fn e(n: usize) -> Self {
        let t = Partition::all(n).into_iter().map(|l| {
            let sign = if (n - l.len()).is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
            let z = Rational::new(sign, l.z_lambda());
            (l, z)
        });
        SymFunc { degree: n, terms: t.collect() }
    }

    pub fn h_product(parts: &[usize]) -> Self {
        parts.iter().fold(Self::one(), |acc, &k| acc.mul(&Self::h(k)))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &LinComb<Partition> {
        &self.terms
    }

    pub fn coeff(&self, lam: &Partition) -> Rational {
        self.terms.coeff(lam)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        SymFunc { degree: self.degree, terms: self.terms.scale(c) }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same(other);
        SymFunc { degree: self.degree.max(other.degree), terms: &self.terms + &other.terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_same(other);
        SymFunc { degree: self.degree.max(other.degree), terms: &self.terms - &other.terms }
    }

    fn check_same(&self, other: &Self) {
        assert!(self.is_zero() || other.is_zero() || self.degree == other.degree, "degree mismatch");
    }

    pub fn mul(&self, other: &Self) -> Self {
        let t = self.terms.bilinear(&other.terms, |a, b| LinComb::basis(a.union(b)));
        SymFunc { degree: self.degree + other.degree, terms: t }
    }

    /// Hall scalar product, `<p_λ, p_μ> = z_λ δ_{λμ}`.
    pub fn scalar(&self, other: &Self) -> Rational {
        let mut s = Rational::zero();
        for (l, c) in self.terms.iter() {
            let d = other.terms.coeff(l);
            if !d.is_zero() {
                s += c * d * Rational::from_integer(l.z_lambda());
            }
        }
        s
    }

    /// `p_k[f]`: every `p_i` becomes `p_{ik}`.
    pub fn adams(&self, k: usize) -> Self {
        let t = self.terms.map_keys(|l| Partition::new(l.parts().iter().map(|&i| i * k).collect()));
        SymFunc { degree: self.degree * k, terms: t }
    }

    /// Value at the exponential alphabet: `p_1 = 1`, `p_k = 0` for `k >= 2`.
    pub fn specialize_e(&self) -> Rational {
        self.terms.coeff(&Partition::new(vec![1; self.degree]))
    }

    /// Value at the one-letter alphabet `A = 1`: every `p_k = 1`.
    pub fn specialize_one(&self) -> Rational {
        self.terms.sum_coeffs()
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(l, c)| json!({"index": l.parts(), "num": json_num(c.numer()), "den": json_num(c.denom())}))
            .collect();
        json!({"basis": "p", "degree": self.degree, "terms": terms})
    }
}

fn json_num(x: &BigInt) -> Value {
    use num_traits::ToPrimitive;
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(l, c)| format!("{c} p[{l}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `h_n[g] = Σ_{ν ⊢ n} (1/z_ν) Π p_{ν_i}[g]`.
pub fn plethysm_h_of(g: &SymFunc, n: usize) -> SymFunc {
    let mut out = SymFunc::zero(g.degree * n);
    for nu in Partition::all(n) {
        let z = Rational::new(BigInt::one(), nu.z_lambda());
        let t = nu.parts().iter().fold(SymFunc::one(), |acc, &k| acc.mul(&g.adams(k)));
        out = out.add(&t.scale(&z));
    }
    out
}

pub fn mobius(n: usize) -> i64 {
    let mut m = n;
    let mut sign = 1;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            m /= d;
            if m.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

/// `ℓ_n = (1/n) Σ_{d | n} μ(d) p_d^{n/d}`.
pub fn lie_character(n: usize) -> SymFunc {
    let mut out = SymFunc::zero(n);
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        let mu = mobius(d);
        if mu != 0 {
            let p = SymFunc::p(Partition::new(vec![d; n / d]));
            out = out.add(&p.scale(&Rational::new(mu.into(), (n as i64).into())));
        }
    }
    out
}

/// `L_μ = Π_i h_{m_i(μ)}[ℓ_i]`.
pub fn gessel_reutenauer(mu: &Partition) -> SymFunc {
    mu.multiplicities().into_iter().fold(SymFunc::one(), |acc, (i, m)| acc.mul(&plethysm_h_of(&lie_character(i), m)))
}

/// `S^I -> h_{i_1} ... h_{i_r}`.
pub fn commutative_image(a: &NsfElement) -> SymFunc {
    let mut out = SymFunc::zero(a.degree());
    for (i, c) in a.s_terms().iter() {
        out = out.add(&SymFunc::h_product(i.parts()).scale(c));
    }
    out
}

/// `Z(x) = Σ_σ x_σ p_{type σ}`, the Frobenius characteristic of the left ideal
/// generated by an idempotent `x` of the group algebra.
pub fn cycle_index(x: &FqsymElement) -> SymFunc {
    let mut t = LinComb::zero();
    for (s, c) in x.f_terms().iter() {
        t.add_term(s.cycle_type(), c.clone());
    }
    SymFunc::new(x.degree(), t)
}

/// `Z(δ_{n,k})` and `Σ_{m_1(μ)=k} L_μ`, in this order.
pub fn character_check(n: usize, k: usize) -> (SymFunc, SymFunc) {
    let d = crate::nsym::d_nk(n, k);
    let z = cycle_index(&embed(&d));
    let mut l = SymFunc::zero(n);
    for mu in Partition::all(n).into_iter().filter(|m| m.multiplicity(1) == k) {
        l = l.add(&gessel_reutenauer(&mu));
    }
    (z, l)
}

/// `d_n(q) = [n]! Σ_{k <= n} (-1)^k q^{k(k-1)/2} / [k]!`, with exact divisions.
pub fn q_derangement(n: usize) -> Result<QPoly> {
    let nf = qfactorial(n);
    let mut out = QPoly::zero();
    for k in 0..=n {
        let quot = nf.div_exact(&qfactorial(k))?;
        let sign = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
        out = &out + &quot.shift((k * k.saturating_sub(1) / 2) as u32).scale(&sign);
    }
    Ok(out)
}

/// `Σ_{σ ∈ D_n} q^{maj σ}`, by enumeration.
pub fn q_derangement_brute(n: usize) -> QPoly {
    let mut out = QPoly::zero();
    for s in Permutation::all(n).into_iter().filter(|s| s.is_derangement()) {
        out.add_term(s.maj() as u32, Rational::one());
    }
    out
}

/// `d_n = n! Σ (-1)^k / k!`.
pub fn derangement_count(n: usize) -> BigInt {
    let mut d = BigInt::one();
    for m in 1..=n {
        d = d * BigInt::from(m) + if m % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    }
    d
}
