//! Truncated formal series in `Sym`, stored degree by degree in the `S` basis.

use num_traits::One;

use super::element::{outer, Nsf, NsfElement};
use crate::combinatorics::Composition;
use crate::exact::{frac, Rational};
use crate::{Error, Result};

/// Components of degree `0..=max_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NsfSeries {
    max_degree: usize,
    comps: Vec<Nsf>,
}

impl NsfSeries {
    pub fn zero(max_degree: usize) -> Self {
        NsfSeries { max_degree, comps: vec![Nsf::zero(); max_degree + 1] }
    }

    pub fn one(max_degree: usize) -> Self {
        let mut s = Self::zero(max_degree);
        s.comps[0] = Nsf::basis(Composition::empty());
        s
    }

    /// Series with a single homogeneous component (dropped if above the truncation).
    pub fn homogeneous(max_degree: usize, x: &NsfElement) -> Self {
        let mut s = Self::zero(max_degree);
        if x.degree() <= max_degree {
            s.comps[x.degree()] = x.s_terms();
        }
        s
    }

    /// Builds from components; each must be homogeneous of its index.
    pub fn from_components(max_degree: usize, comps: Vec<Nsf>) -> Self {
        let mut s = Self::zero(max_degree);
        for (d, c) in comps.into_iter().enumerate().take(max_degree + 1) {
            assert!(c.keys().all(|i| i.weight() == d), "component {d} is not homogeneous");
            s.comps[d] = c;
        }
        s
    }

    /// `σ_1 = Σ S_n`.
    pub fn sigma1(max_degree: usize) -> Self {
        Self::from_components(max_degree, (0..=max_degree).map(|n| Nsf::basis(Composition::single(n))).collect())
    }

    /// `λ_{-1} = Σ (-1)^n Λ_n`.
    pub fn lambda_minus(max_degree: usize) -> Self {
        Self::from_components(
            max_degree,
            (0..=max_degree)
                .map(|n| {
                    let l = NsfElement::lambda_n(n).s_terms();
                    if n % 2 == 0 {
                        l
                    } else {
                        l.scale(&-Rational::one())
                    }
                })
                .collect(),
        )
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn component(&self, n: usize) -> NsfElement {
        NsfElement::new(n, super::NsfBasis::S, self.comps[n].clone())
    }

    pub fn components(&self) -> &[Nsf] {
        &self.comps
    }

    pub fn constant_term(&self) -> Rational {
        self.comps[0].coeff(&Composition::empty())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        NsfSeries { max_degree: self.max_degree, comps: self.comps.iter().map(|x| x.scale(c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.max_degree.min(other.max_degree);
        Self::from_components(n, (0..=n).map(|d| &self.comps[d] + &other.comps[d]).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.max_degree.min(other.max_degree);
        Self::from_components(n, (0..=n).map(|d| &self.comps[d] - &other.comps[d]).collect())
    }

    /// Outer product, truncated.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.max_degree.min(other.max_degree);
        let mut out = Self::zero(n);
        for a in 0..=n {
            if self.comps[a].is_zero() {
                continue;
            }
            for b in 0..=n - a {
                if other.comps[b].is_zero() {
                    continue;
                }
                let p = outer(&self.comps[a], &other.comps[b]);
                out.comps[a + b] += p;
            }
        }
        out
    }

    fn lowest_degree(&self) -> Option<usize> {
        self.comps.iter().position(|c| !c.is_zero())
    }

    /// `exp(x)` for `x` without constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.comps[0].is_zero() {
            return Err(Error::SeriesDomain { op: "exp", expected: "0" });
        }
        let n = self.max_degree;
        let mut out = Self::one(n);
        let mut power = Self::one(n);
        let low = self.lowest_degree().unwrap_or(n + 1);
        let mut k = 1;
        while k * low <= n {
            power = power.mul(self).scale(&frac(1, k as i64));
            out = out.add(&power);
            k += 1;
        }
        Ok(out)
    }

    /// `log(x)` for `x` with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.constant_term().is_one() || self.comps[0].len() != 1 {
            return Err(Error::SeriesDomain { op: "log", expected: "1" });
        }
        let n = self.max_degree;
        let y = self.sub(&Self::one(n));
        let low = y.lowest_degree().unwrap_or(n + 1);
        let mut out = Self::zero(n);
        let mut power = Self::one(n);
        let mut k = 1;
        while k * low <= n {
            power = power.mul(&y);
            let c = if k % 2 == 1 { frac(1, k as i64) } else { frac(-1, k as i64) };
            out = out.add(&power.scale(&c));
            k += 1;
        }
        Ok(out)
    }

    /// Multiplicative inverse for a series with constant term 1.
    pub fn inverse(&self) -> Result<Self> {
        if !self.constant_term().is_one() || self.comps[0].len() != 1 {
            return Err(Error::SeriesDomain { op: "inverse", expected: "1" });
        }
        let n = self.max_degree;
        let y = self.sub(&Self::one(n));
        let mut out = Self::one(n);
        let mut power = Self::one(n);
        for k in 1..=n {
            power = power.mul(&y);
            let p = if k % 2 == 1 { power.scale(&-Rational::one()) } else { power.clone() };
            out = out.add(&p);
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }
}

/// `σ_1^♯ = e^{-S_1} σ_1`.
pub fn sigma_sharp(max_degree: usize) -> NsfSeries {
    let s1 = NsfSeries::homogeneous(max_degree, &NsfElement::s_n(1)).scale(&-Rational::one());
    s1.exp().expect("no constant term").mul(&NsfSeries::sigma1(max_degree))
}

/// `S_n^♯ = Σ_i (-1)^i S_1^i / i! S_{n-i}`.
pub fn s_sharp(n: usize) -> NsfElement {
    let mut t = Nsf::zero();
    for i in 0..=n {
        let c = Rational::new(if i % 2 == 0 { 1.into() } else { (-1).into() }, crate::exact::rational::factorial(i));
        let mut parts = vec![1; i];
        if n > i {
            parts.push(n - i);
        }
        t.add_term(Composition::new(parts), c);
    }
    NsfElement::new(n, super::NsfBasis::S, t)
}

/// `M_I(1-E)`: the `S^I` coefficients of `σ_1^♯` up to `max_degree`.
pub fn monomial_coeffs_of_e_transform(max_degree: usize) -> std::collections::BTreeMap<Composition, Rational> {
    let s = sigma_sharp(max_degree);
    let mut out = std::collections::BTreeMap::new();
    for n in 0..=max_degree {
        for c in Composition::all(n) {
            out.insert(c.clone(), s.components()[n].coeff(&c));
        }
    }
    out
}

/// `λ_{-t}(A) (1 - t S_1(A))^{-1}`, degreewise.
pub fn desarrangement_series(max_degree: usize) -> NsfSeries {
    let geo =
        NsfSeries::from_components(max_degree, (0..=max_degree).map(|n| Nsf::basis(Composition::ones(n))).collect());
    NsfSeries::lambda_minus(max_degree).mul(&geo)
}

/// The ribbons `R_{1^{2i} ▷ J}`, `1 <= i <= n/2`, `|J| = n - 2i`.
pub fn desarrangement_ribbons(n: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    if n == 0 {
        return vec![Composition::empty()];
    }
    for i in 1..=n / 2 {
        for j in Composition::all(n - 2 * i) {
            out.push(Composition::ones(2 * i).near_concat(&j));
        }
    }
    out.sort();
    out
}
