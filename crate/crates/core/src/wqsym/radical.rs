//! The radical of `W_n` and its semisimple quotient, the set partitions of
//! `[n]` under `∧`.

use std::collections::BTreeMap;

use num_traits::One;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::combinatorics::{pack_biword, PackedWord, SetPartition};
use crate::exact::{Rational, Span};
use crate::{Error, Result};

use super::element::{Wq, WqsymElement};

pub const RADICAL_MAX_N: usize = 6;

#[derive(Clone, Debug)]
pub struct RadicalReport {
    pub n: usize,
    /// `N_u - N_{u_0}` with `u_0` the smallest word over `Π(u)`.
    pub radical_basis: Vec<WqsymElement>,
    pub partitions: Vec<SetPartition>,
    /// `table[a][b]` is the index of `partitions[a] ∧ partitions[b]`.
    pub product_table: Vec<Vec<usize>>,
    pub squares_vanish: bool,
    /// `Π(pack(u, v)) = Π(u) ∧ Π(v)` for all `u, v`.
    pub quotient_matches_meet: bool,
}

impl RadicalReport {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "radical_dim": self.radical_basis.len(),
            "partitions": self.partitions.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "product_table": self.product_table,
            "squares_vanish": self.squares_vanish,
            "quotient_matches_meet": self.quotient_matches_meet,
        })
    }
}

pub fn radical_and_quotient(n: usize) -> Result<RadicalReport> {
    if n > RADICAL_MAX_N {
        return Err(Error::CostGuard { what: "radical_and_quotient", n, limit: RADICAL_MAX_N });
    }
    let words = PackedWord::all(n);
    let mut classes: BTreeMap<SetPartition, Vec<PackedWord>> = BTreeMap::new();
    for u in &words {
        classes.entry(u.set_partition()).or_default().push(u.clone());
    }
    let mut radical_basis = Vec::new();
    for ws in classes.values() {
        let u0 = &ws[0];
        for u in &ws[1..] {
            let t: Wq = [(u.clone(), Rational::one()), (u0.clone(), -Rational::one())].into_iter().collect();
            radical_basis.push(WqsymElement::new(n, t));
        }
    }
    let squares_vanish = radical_basis.iter().all(|x| x.internal_product(x).is_zero());
    let partitions: Vec<SetPartition> = classes.keys().cloned().collect();
    let product_table = partitions
        .iter()
        .map(|a| partitions.iter().map(|b| partitions.binary_search(&a.meet(b)).expect("set partition")).collect())
        .collect();
    let quotient_matches_meet = words.par_iter().all(|u| {
        let pu = u.set_partition();
        words.iter().all(|v| {
            let w = pack_biword(u.word(), v.word()).expect("equal lengths");
            w.set_partition() == pu.meet(&v.set_partition())
        })
    });
    Ok(RadicalReport { n, radical_basis, partitions, product_table, squares_vanish, quotient_matches_meet })
}

/// Whether the span of the given elements is a two-sided `*`-ideal of `W_n`.
pub fn is_two_sided_ideal(n: usize, gens: &[WqsymElement]) -> bool {
    let mut span = Span::new();
    for g in gens {
        span.insert(g.terms());
    }
    PackedWord::all(n).into_iter().all(|u| {
        let x = WqsymElement::n(u);
        gens.iter()
            .all(|g| span.contains(x.internal_product(g).terms()) && span.contains(g.internal_product(&x).terms()))
    })
}
