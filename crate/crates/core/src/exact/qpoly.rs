//! Univariate polynomials in `q` with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::rational::{self, Rational};
use crate::{Error, Result};

/// Sparse polynomial; zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: BTreeMap<u32, Rational>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn q() -> Self {
        Self::monomial(1, Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exp: u32, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    /// From coefficients listed by increasing exponent.
    pub fn from_coeffs<I: IntoIterator<Item = Rational>>(cs: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in cs.into_iter().enumerate() {
            p.add_term(e as u32, c);
        }
        p
    }

    pub fn from_int_coeffs(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| rational::int(c)))
    }

    pub fn add_term(&mut self, exp: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: u32) -> Rational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    /// Dense coefficient list `[c_0, ..., c_deg]`.
    pub fn dense(&self) -> Vec<Rational> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|e| self.coeff(e)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QPoly { coeffs: self.coeffs.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    pub fn shift(&self, by: u32) -> Self {
        QPoly { coeffs: self.coeffs.iter().map(|(e, v)| (*e + by, v.clone())).collect() }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        let mut prev = self.degree().unwrap_or(0);
        for (e, c) in self.coeffs.iter().rev() {
            for _ in *e..prev {
                acc *= x;
            }
            acc += c;
            prev = *e;
        }
        for _ in 0..prev {
            acc *= x;
        }
        acc
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Euclidean division; returns `(quotient, remainder)`.
    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.coeff(dd);
        let mut r = self.clone();
        let mut quo = QPoly::zero();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = r.coeff(rd) / &lead;
            let t = QPoly::monomial(rd - dd, c);
            r = &r - &(&t * d);
            quo = &quo + &t;
        }
        (quo, r)
    }

    /// Exact division; errors when the remainder is nonzero.
    pub fn div_exact(&self, d: &QPoly) -> Result<QPoly> {
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonExactDivision)
        }
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(self, rhs: QPoly) -> QPoly {
        &self + &rhs
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(self, rhs: QPoly) -> QPoly {
        &self - &rhs
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

/// `[n]_q = 1 + q + ... + q^{n-1}`.
pub fn qint(n: usize) -> QPoly {
    QPoly::from_coeffs((0..n).map(|_| Rational::one()))
}

/// `[n]_q! = [1][2]...[n]`.
pub fn qfactorial(n: usize) -> QPoly {
    (1..=n).fold(QPoly::one(), |acc, j| &acc * &qint(j))
}

/// Gaussian binomial `[n choose k]_q`, zero outside `0 <= k <= n`.
pub fn qbinomial(n: usize, k: usize) -> QPoly {
    if k > n {
        return QPoly::zero();
    }
    let num = qfactorial(n);
    let den = &qfactorial(k) * &qfactorial(n - k);
    num.div_exact(&den).expect("q-binomials are polynomials")
}

/// Displays by decreasing exponent, e.g. `3q^2+9q+22`, `2q^2`, `-1/2q+1`.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if neg {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let var = match *e {
                0 => String::new(),
                1 => "q".to_string(),
                k => format!("q^{k}"),
            };
            if *e == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{a}{var}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

impl FromStr for QPoly {
    type Err = Error;

    /// Inverse of `Display`.
    fn from_str(s: &str) -> Result<QPoly> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = QPoly::zero();
        let mut chunks = Vec::new();
        let mut cur = String::new();
        for (i, ch) in s.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 {
                chunks.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        chunks.push(cur);
        for chunk in chunks {
            let (sign, body) = match chunk.strip_prefix('-') {
                Some(b) => (-Rational::one(), b),
                None => (Rational::one(), chunk.strip_prefix('+').unwrap_or(&chunk)),
            };
            let (coef, exp) = match body.find('q') {
                None => (rational::parse(body)?, 0u32),
                Some(pos) => {
                    let c = if pos == 0 { Rational::one() } else { rational::parse(&body[..pos])? };
                    let rest = &body[pos + 1..];
                    let e = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|t| t.parse::<u32>().ok())
                            .ok_or_else(|| Error::Parse(format!("bad exponent in {chunk:?}")))?
                    };
                    (c, e)
                }
            };
            out.add_term(exp, sign * coef);
        }
        Ok(out)
    }
}
