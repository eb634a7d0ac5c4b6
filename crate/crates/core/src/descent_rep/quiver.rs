//! Quivers read off `q`-Cartan matrices.

use super::cartan::{cartan_d0, cartan_dk, cartan_sym, CartanMatrix};
use crate::combinatorics::Partition;
use crate::exact::Rational;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algebra {
    D0,
    /// `None` is `D^(∞)`.
    Dk(Option<usize>),
    Sym,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<Partition>,
    /// `(λ, μ)` for an arrow `λ -> μ`.
    pub arrows: Vec<(Partition, Partition)>,
}

/// One arrow per unit of the coefficient of `q` in `c_{λμ}(q)`.
pub fn quiver_from_cartan(m: &CartanMatrix) -> Quiver {
    let mut arrows = Vec::new();
    for (r, mu) in m.labels.iter().enumerate() {
        for (c, lam) in m.labels.iter().enumerate() {
            let k = m.entries[r][c].coeff(1);
            let mut j = Rational::from_integer(0.into());
            while j < k {
                arrows.push((lam.clone(), mu.clone()));
                j += Rational::from_integer(1.into());
            }
        }
    }
    arrows.sort();
    Quiver { vertices: m.labels.clone(), arrows }
}

/// `λ -> μ` iff `μ` is obtained from `λ` by adding two distinct parts.
pub fn quiver_by_merging(vertices: &[Partition]) -> Quiver {
    let mut arrows = Vec::new();
    for lam in vertices {
        for mu in lam.merge_two_distinct() {
            if vertices.contains(&mu) {
                arrows.push((lam.clone(), mu));
            }
        }
    }
    arrows.sort();
    Quiver { vertices: vertices.to_vec(), arrows }
}

/// The quiver, computed from Cartan entries and checked against the merging rule.
pub fn quiver(alg: Algebra, n: usize) -> Result<Quiver> {
    let m = match alg {
        Algebra::D0 => cartan_d0(n)?,
        Algebra::Dk(k) => cartan_dk(n, k)?,
        Algebra::Sym => cartan_sym(n)?,
    };
    let a = quiver_from_cartan(&m);
    // arrows of D^(k) stay inside one block: merging never changes the number of ones
    // unless a part 1 is merged, which leaves the block
    let mut b = quiver_by_merging(&m.labels);
    if matches!(alg, Algebra::Dk(_)) {
        b.arrows.retain(|(l, m)| l.multiplicity(1) == m.multiplicity(1));
    }
    if a != b {
        return Err(Error::Consistency(format!("quiver mismatch for {alg:?}, n = {n}")));
    }
    Ok(a)
}
