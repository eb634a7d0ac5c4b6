//! Complete families of orthogonal idempotents of `W_n`, indexed by set
//! partitions, from the Zassenhaus decomposition of `S_n`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::combinatorics::composition::next_permutation;
use crate::combinatorics::{Composition, PackedWord, Partition, SetPartition};
use crate::exact::{solve_in_span, Rational};
use crate::nsym::{zassenhaus, Nsf, NsfBasis, NsfElement};
use crate::{Error, Result};

use super::element::{embed, Wq, WqsymElement};

pub const SALIOLA_MAX_N: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SaliolaMode {
    /// `e_π = l_π * (N_{1^n} - Σ_{π' > π} e_{π'})`.
    Recursive,
    /// `e_π = l_π * e_λ`, `λ = Λ(π)`.
    Direct,
}

/// `c_I` with `S_n = Σ_I c_I ζ^I`.
pub fn zassenhaus_coefficients(n: usize) -> Result<BTreeMap<Composition, Rational>> {
    if n == 0 {
        return Ok([(Composition::empty(), Rational::one())].into_iter().collect());
    }
    let fam = zassenhaus(n);
    let comps = Composition::all(n);
    let basis: Vec<Nsf> = comps.iter().map(|i| fam.power(i)).collect();
    let c = solve_in_span(&NsfElement::s_n(n).s_terms(), &basis)
        .ok_or_else(|| Error::Consistency(format!("S_{n} is not in the span of the ζ^I")))?;
    Ok(comps.into_iter().zip(c).filter(|(_, x)| !x.is_zero()).collect())
}

/// `e_λ = Σ_{I ↓ λ} c_I ζ^I` in `Sym_n`.
pub fn sym_idempotents(n: usize) -> Result<BTreeMap<Partition, NsfElement>> {
    let c = zassenhaus_coefficients(n)?;
    let fam = zassenhaus(n.max(1));
    let mut out: BTreeMap<Partition, Nsf> = Partition::all(n).into_iter().map(|l| (l, Nsf::zero())).collect();
    for (i, ci) in &c {
        let p = if n == 0 { Nsf::basis(Composition::empty()) } else { fam.power(i) };
        out.get_mut(&i.sorted()).expect("partition of n").add_scaled(&p, ci);
    }
    Ok(out.into_iter().map(|(l, t)| (l, NsfElement::new(n, NsfBasis::S, t))).collect())
}

/// The packed words `u` with `Π(u) = π`: all orderings of the blocks.
pub fn words_over(pi: &SetPartition) -> Vec<PackedWord> {
    let n = pi.size();
    let mut order: Vec<usize> = (0..pi.num_blocks()).collect();
    let mut out = Vec::new();
    loop {
        let blocks: Vec<Vec<usize>> = order.iter().map(|&k| pi.blocks()[k].clone()).collect();
        out.push(PackedWord::from_set_composition(n, &blocks));
        if !next_permutation(&mut order) {
            break;
        }
    }
    out
}

/// `l_π = Σ_{Π(u) = π} c_{ev(u)} N_u`; the coefficients must sum to 1.
pub fn l_pi(pi: &SetPartition, c: &BTreeMap<Composition, Rational>) -> Result<WqsymElement> {
    let terms: Wq = words_over(pi)
        .into_iter()
        .map(|u| {
            let x = c.get(&u.evaluation()).cloned().unwrap_or_else(Rational::zero);
            (u, x)
        })
        .collect();
    if terms.sum_coeffs() != Rational::one() {
        return Err(Error::Consistency(format!("coefficients of l_π for {pi} sum to {}", terms.sum_coeffs())));
    }
    Ok(WqsymElement::new(pi.size(), terms))
}

pub fn saliola_idempotents(n: usize, mode: SaliolaMode) -> Result<BTreeMap<SetPartition, WqsymElement>> {
    if n > SALIOLA_MAX_N {
        return Err(Error::CostGuard { what: "saliola_idempotents", n, limit: SALIOLA_MAX_N });
    }
    let c = zassenhaus_coefficients(n)?;
    let mut parts = SetPartition::all(n);
    // Finer partitions first.
    parts.sort_by_key(|p| std::cmp::Reverse(p.num_blocks()));
    let mut out: BTreeMap<SetPartition, WqsymElement> = BTreeMap::new();
    match mode {
        SaliolaMode::Recursive => {
            for pi in &parts {
                let mut x = WqsymElement::identity(n);
                for (q, e) in &out {
                    if q != pi && q.refines(pi) {
                        x = &x - e;
                    }
                }
                out.insert(pi.clone(), l_pi(pi, &c)?.internal_product(&x));
            }
        }
        SaliolaMode::Direct => {
            let sym: BTreeMap<Partition, WqsymElement> =
                sym_idempotents(n)?.into_iter().map(|(l, e)| (l, embed(&e))).collect();
            for pi in &parts {
                out.insert(pi.clone(), l_pi(pi, &c)?.internal_product(&sym[&pi.shape()]));
            }
        }
    }
    Ok(out)
}
