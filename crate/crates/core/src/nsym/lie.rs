//! Lie idempotent families: Zassenhaus, Solomon (Eulerian) and the Hausdorff
//! family attached to `σ_1^♯`, with their idempotent bases.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use once_cell::sync::Lazy;
use parking_lot::Mutex;

use super::element::{outer, Nsf, NsfBasis, NsfElement};
use super::series::{sigma_sharp, NsfSeries};
use crate::combinatorics::{Composition, Partition};
use crate::exact::rational::factorial;
use crate::exact::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LieKind {
    Zassenhaus,
    Solomon,
    Hausdorff,
}

/// Homogeneous elements `γ_1, ..., γ_N`.
#[derive(Clone, Debug)]
pub struct LieFamily {
    pub kind: LieKind,
    elements: Vec<Nsf>,
}

impl LieFamily {
    pub fn max_degree(&self) -> usize {
        self.elements.len()
    }

    /// `γ_n`, `1 <= n <= N`.
    pub fn get(&self, n: usize) -> NsfElement {
        NsfElement::new(n, NsfBasis::S, self.elements[n - 1].clone())
    }

    pub fn terms(&self, n: usize) -> &Nsf {
        &self.elements[n - 1]
    }

    /// `γ^I = γ_{i_1} ... γ_{i_r}`.
    pub fn power(&self, i: &Composition) -> Nsf {
        i.parts().iter().fold(Nsf::basis(Composition::empty()), |acc, &p| outer(&acc, self.terms(p)))
    }

    /// Idempotents `E_λ` attached to the family, for all partitions of `n`.
    ///
    /// Zassenhaus: `ζ^λ / m_λ` with the parts of `λ` in increasing order (the
    /// order in which the factors of `σ_1 = e^{ζ_1} e^{ζ_2} ...` occur).
    /// Solomon: `(1/ℓ(λ)!) Σ_{I↓λ} φ^I`.
    /// Hausdorff: for `λ = μ ∪ 1^s`, `(1/(ℓ(μ)! s!)) Σ_{J↓μ} π^{1^s J}`.
    pub fn idempotents(&self, n: usize) -> BTreeMap<Partition, NsfElement> {
        let mut out = BTreeMap::new();
        for lam in Partition::all(n) {
            let e = match self.kind {
                LieKind::Zassenhaus => {
                    let inc = increasing(&lam);
                    let m = Rational::from_integer(lam.m_lambda());
                    self.power(&inc).scale(&(Rational::from_integer(1.into()) / m))
                }
                LieKind::Solomon => {
                    let c = Rational::new(BigInt::from(1), factorial(lam.len()));
                    let mut t = Nsf::zero();
                    for i in lam.as_composition().rearrangements() {
                        t.add_scaled(&self.power(&i), &c);
                    }
                    t
                }
                LieKind::Hausdorff => {
                    let s = lam.multiplicity(1);
                    let mu = lam.without_ones();
                    let c = Rational::new(BigInt::from(1), factorial(mu.len()) * factorial(s));
                    let mut t = Nsf::zero();
                    for j in mu.as_composition().rearrangements() {
                        t.add_scaled(&self.power(&Composition::ones(s).concat(&j)), &c);
                    }
                    t
                }
            };
            out.insert(lam, NsfElement::new(n, NsfBasis::S, e));
        }
        out
    }
}

/// Parts of `λ` in weakly increasing order.
pub fn increasing(lam: &Partition) -> Composition {
    let mut v = lam.parts().to_vec();
    v.reverse();
    Composition::new(v)
}

static ZASSENHAUS: Lazy<Mutex<Vec<Nsf>>> = Lazy::new(|| Mutex::new(Vec::new()));

/// `σ_1 = e^{ζ_1} e^{ζ_2} ...`, solved by peeling off one factor per degree.
pub fn zassenhaus(max_degree: usize) -> LieFamily {
    let mut cache = ZASSENHAUS.lock();
    if cache.len() < max_degree {
        let mut x = NsfSeries::sigma1(max_degree);
        let mut zetas = Vec::with_capacity(max_degree);
        for k in 1..=max_degree {
            // x = e^{ζ_k} e^{ζ_{k+1}} ..., so its degree-k part is ζ_k.
            let z = x.components()[k].clone();
            let minus = NsfSeries::homogeneous(max_degree, &NsfElement::new(k, NsfBasis::S, z.clone()))
                .scale(&-Rational::from_integer(1.into()));
            x = minus.exp().expect("no constant term").mul(&x);
            zetas.push(z);
        }
        *cache = zetas;
    }
    LieFamily { kind: LieKind::Zassenhaus, elements: cache[..max_degree].to_vec() }
}

pub fn zeta(n: usize) -> NsfElement {
    zassenhaus(n).get(n)
}

/// `e_I = ζ^I / m_I`.
pub fn zeta_e(i: &Composition) -> NsfElement {
    let fam = zassenhaus(i.weight().max(1));
    let m = Rational::from_integer(i.sorted().m_lambda());
    NsfElement::new(i.weight(), NsfBasis::S, fam.power(i).scale(&(Rational::from_integer(1.into()) / m)))
}

/// `φ_n = [log σ_1]_n`.
pub fn solomon(max_degree: usize) -> LieFamily {
    let l = NsfSeries::sigma1(max_degree).log().expect("constant term 1");
    LieFamily { kind: LieKind::Solomon, elements: l.components()[1..].to_vec() }
}

/// `π_1 = φ_1 = S_1` and `π_n = [log σ_1^♯]_n` for `n >= 2`.
pub fn hausdorff(max_degree: usize) -> LieFamily {
    let l = sigma_sharp(max_degree).log().expect("constant term 1");
    let mut elements = l.components()[1..].to_vec();
    if max_degree >= 1 {
        elements[0] = Nsf::basis(Composition::single(1));
    }
    LieFamily { kind: LieKind::Hausdorff, elements }
}

/// The expansion `S_n = Σ_{r+s=n} 1/(r!s!) Σ_{ℓ(J)=r, |J|=n-s, 1∉J} π^{1^s J}`.
pub fn hausdorff_decomposition(n: usize) -> Nsf {
    let fam = hausdorff(n.max(1));
    let mut out = Nsf::zero();
    for s in 0..=n {
        for j in Composition::all(n - s) {
            if j.has_part(1) {
                continue;
            }
            let c = Rational::new(BigInt::from(1), factorial(j.len()) * factorial(s));
            out.add_scaled(&fam.power(&Composition::ones(s).concat(&j)), &c);
        }
    }
    out
}
