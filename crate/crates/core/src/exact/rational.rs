//! Arbitrary-precision rationals.

use num_bigint::BigInt;
use num_traits::One;

pub use num_rational::BigRational as Rational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`, reduced. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn factorial_q(n: usize) -> Rational {
    Rational::from_integer(factorial(n))
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Parses `a`, `-a` or `a/b`.
pub fn parse(s: &str) -> crate::Result<Rational> {
    s.trim().parse::<Rational>().map_err(|_| crate::Error::Parse(format!("not a rational: {s:?}")))
}

/// Numerator and denominator as decimal strings, for serialization.
pub fn num_den_strings(r: &Rational) -> (String, String) {
    (r.numer().to_string(), r.denom().to_string())
}
