//! Cartan invariants through dimensions of symmetrized Lie products.
//!
//! `D^(0)` and `Sym` are free associative algebras over the primitive
//! elements `ζ_k`, so `c_{λμ}` is the dimension of the part of
//! `⊗_d S^{m_d(μ)}(L_d)` whose content in the generators is `λ`, where `L` is
//! the free Lie algebra on one generator `x_k` of weight `k` for each `k`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::combinatorics::Partition;
use crate::csym::mobius;
use crate::exact::rational::factorial;
use crate::exact::Rational;

/// Polynomial in the commuting variables `x_k`; a monomial is stored as the
/// partition listing each `k` with its exponent as multiplicity.
type Content = BTreeMap<Partition, Rational>;

/// Dimension of the multihomogeneous component of the free Lie algebra with
/// content `alpha` (Witt's formula).
pub fn multigraded_lie_dim(alpha: &Partition) -> u64 {
    let mult: Vec<usize> = alpha.multiplicities().into_iter().map(|(_, m)| m).collect();
    let n = alpha.len();
    if n == 0 {
        return 0;
    }
    let g = mult.iter().fold(0usize, |a, &b| a.gcd(&b));
    let mut s = BigInt::zero();
    for d in (1..=g).filter(|d| g % d == 0) {
        let mu = mobius(d);
        if mu == 0 {
            continue;
        }
        let denom = mult.iter().fold(BigInt::from(1), |acc, &m| acc * factorial(m / d));
        s += BigInt::from(mu) * (factorial(n / d) / denom);
    }
    (s / BigInt::from(n)).to_u64().expect("dimension fits")
}

fn lie_component(d: usize) -> Content {
    Partition::all(d)
        .into_iter()
        .filter_map(|a| {
            let dim = multigraded_lie_dim(&a);
            (dim > 0).then(|| (a, Rational::from_integer(dim.into())))
        })
        .collect()
}

fn mul(a: &Content, b: &Content) -> Content {
    let mut out = Content::new();
    for (x, c) in a {
        for (y, e) in b {
            let k = x.union(y);
            let v = out.entry(k).or_insert_with(Rational::zero);
            *v += c * e;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn adams(a: &Content, k: usize) -> Content {
    a.iter()
        .map(|(x, c)| (Partition::new(x.parts().iter().flat_map(|&p| std::iter::repeat_n(p, k)).collect()), c.clone()))
        .collect()
}

/// `h_m[f] = Σ_{ν ⊢ m} Π p_{ν_i}[f] / z_ν`.
fn sym_power(f: &Content, m: usize) -> Content {
    let mut out = Content::new();
    for nu in Partition::all(m) {
        let z = Rational::new(1.into(), nu.z_lambda());
        let mut t = Content::from([(Partition::empty(), Rational::from_integer(1.into()))]);
        for &k in nu.parts() {
            t = mul(&t, &adams(f, k));
        }
        for (x, c) in t {
            let v = out.entry(x).or_insert_with(Rational::zero);
            *v += c * &z;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// The content distribution of `⊗_d S^{m_d(μ)}(L_d)`.
pub fn symmetrized_lie_contents(mu: &Partition) -> BTreeMap<Partition, u64> {
    let mut t = Content::from([(Partition::empty(), Rational::from_integer(1.into()))]);
    for (d, m) in mu.multiplicities() {
        t = mul(&t, &sym_power(&lie_component(d), m));
    }
    t.into_iter()
        .map(|(k, v)| {
            assert!(v.is_integer(), "dimension must be an integer");
            (k, v.to_integer().to_u64().expect("dimension fits"))
        })
        .collect()
}

/// `c_{λμ} = dim [S^μ(L)]_λ`.
pub fn lie_cartan_coefficient(lambda: &Partition, mu: &Partition) -> u64 {
    symmetrized_lie_contents(mu).get(lambda).copied().unwrap_or(0)
}
