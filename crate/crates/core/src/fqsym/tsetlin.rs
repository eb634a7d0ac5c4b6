//! The Tsetlin library `T_n = S^{1,n-1}` and its spectral projectors `D_{n,k}`.

use std::collections::BTreeMap;

use num_traits::{ToPrimitive, Zero};

use crate::exact::Rational;
use crate::nsym::{d_nk, NsfElement};
use crate::{Error, Result};

use super::element::{embed, FqsymElement};
use super::sharp::trace_dimension;

/// `S^{1,n-1}` (`S_1` for `n = 1`).
pub fn t_sym(n: usize) -> NsfElement {
    if n <= 1 {
        return NsfElement::s_n(n);
    }
    NsfElement::s(vec![1, n - 1])
}

pub fn t_n(n: usize) -> FqsymElement {
    embed(&t_sym(n))
}

/// Eigenvalues `0, 1, ..., n-2, n`.
pub fn spectrum(n: usize) -> Vec<usize> {
    let mut s: Vec<usize> = (0..n.saturating_sub(1)).collect();
    s.push(n);
    s
}

#[derive(Clone, Debug)]
pub struct TsetlinSpectrum {
    pub n: usize,
    pub spectrum: Vec<usize>,
    pub projectors: BTreeMap<usize, FqsymElement>,
    pub dims: BTreeMap<usize, u64>,
}

fn shifted(t: &NsfElement, k: usize) -> NsfElement {
    let n = t.degree();
    t - &NsfElement::s_n(n).scale(&Rational::from_integer(k.into()))
}

fn product(fs: &[NsfElement], n: usize) -> NsfElement {
    fs.iter().fold(NsfElement::s_n(n), |acc, f| acc.internal_product(f))
}

/// `P_n(T_n)` vanishes and no factor can be dropped.
pub fn check_minimal_polynomial(n: usize) -> Result<()> {
    let t = t_sym(n);
    let factors: Vec<NsfElement> = spectrum(n).into_iter().map(|k| shifted(&t, k)).collect();
    if !product(&factors, n).is_zero() {
        return Err(Error::Consistency(format!("P_{n}(T_{n}) != 0")));
    }
    for i in 0..factors.len() {
        let mut rest = factors.clone();
        rest.remove(i);
        if product(&rest, n).is_zero() {
            return Err(Error::Consistency(format!("T_{n} annihilated by a proper factor of P_{n}")));
        }
    }
    Ok(())
}

/// Projectors, spectrum and eigenspace dimensions, with every relation checked.
pub fn tsetlin_spectral(n: usize) -> Result<TsetlinSpectrum> {
    if n == 0 {
        return Err(Error::Invalid("tsetlin_spectral needs n >= 1".into()));
    }
    check_minimal_polynomial(n)?;
    let t = t_sym(n);
    let spec = spectrum(n);
    let ds: BTreeMap<usize, NsfElement> = spec.iter().map(|&k| (k, d_nk(n, k))).collect();
    let mut total = NsfElement::zero(n);
    for (&k, d) in &ds {
        for (&l, e) in &ds {
            let p = d.internal_product(e);
            let ok = if k == l { &p == d } else { p.is_zero() };
            if !ok {
                return Err(Error::Consistency(format!("D_{{{n},{k}}} * D_{{{n},{l}}}")));
            }
        }
        if d.internal_product(&t) != d.scale(&Rational::from_integer(k.into())) {
            return Err(Error::Consistency(format!("D_{{{n},{k}}} * T_{n} != {k} D_{{{n},{k}}}")));
        }
        total = &total + d;
    }
    if total != NsfElement::s_n(n) {
        return Err(Error::Consistency(format!("sum of D_{{{n},k}} != S_{n}")));
    }
    let projectors: BTreeMap<usize, FqsymElement> = ds.iter().map(|(&k, d)| (k, embed(d))).collect();
    let mut dims = BTreeMap::new();
    for (&k, e) in &projectors {
        let d = trace_dimension(e);
        if !d.is_integer() || d < Rational::zero() {
            return Err(Error::Consistency(format!("non-integral trace for D_{{{n},{k}}}")));
        }
        dims.insert(k, d.to_integer().to_u64().expect("dimension fits"));
    }
    Ok(TsetlinSpectrum { n, spectrum: spec, projectors, dims })
}
