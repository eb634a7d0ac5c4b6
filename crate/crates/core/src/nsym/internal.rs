//! The internal product `S^I * S^J` by the integer-matrix rule.
//!
//! By the splitting formula, `S^I * S^J` is the sum of `S^M` over nonnegative
//! integer matrices `M` with row sums `I` and column sums `J`, where `S^M`
//! reads the nonzero entries of `M` row by row.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use once_cell::sync::Lazy;
use parking_lot::RwLock;
use rayon::prelude::*;

use super::element::Nsf;
use crate::combinatorics::Composition;
use crate::exact::Rational;

/// Structure constants of one product, keyed by descent mask of the result.
type Table = Arc<Vec<(u64, u128)>>;

static CACHE: Lazy<RwLock<HashMap<(Composition, Composition), Table>>> = Lazy::new(|| RwLock::new(HashMap::new()));

fn table(i: &Composition, j: &Composition) -> Table {
    let key = (i.clone(), j.clone());
    if let Some(v) = CACHE.read().get(&key) {
        return v.clone();
    }
    let mut v: Vec<(u64, u128)> =
        matrix_rule_counts(i.parts(), j.parts()).into_iter().map(|(c, m)| (c.descent_mask(), m)).collect();
    v.sort_unstable();
    CACHE.write().entry(key).or_insert_with(|| Arc::new(v)).clone()
}

/// `S^I * S^J` in the `S` basis. Zero when the weights differ.
pub fn s_internal(i: &Composition, j: &Composition) -> Nsf {
    if i.weight() != j.weight() {
        return Nsf::zero();
    }
    let n = i.weight();
    table(i, j)
        .iter()
        .map(|&(m, c)| (Composition::from_descent_mask(n, m), Rational::from_integer(BigInt::from(c))))
        .collect()
}

/// Row sums `rows`, column sums `cols`, read row by row; multiplicities of each reading.
pub fn matrix_rule_counts(rows: &[usize], cols: &[usize]) -> BTreeMap<Composition, u128> {
    let mut out = BTreeMap::new();
    if rows.iter().sum::<usize>() != cols.iter().sum::<usize>() {
        return out;
    }
    // state: remaining column sums and the word read so far -> multiplicity
    let mut states: HashMap<(Vec<usize>, Vec<usize>), u128> = HashMap::new();
    states.insert((cols.to_vec(), Vec::new()), 1);
    for &r in rows {
        let mut next: HashMap<(Vec<usize>, Vec<usize>), u128> = HashMap::new();
        for ((rem, word), mult) in states {
            let mut row = vec![0usize; rem.len()];
            fill_row(&rem, r, 0, &mut row, &mut |row| {
                let rem2: Vec<usize> = rem.iter().zip(row).map(|(a, b)| a - b).collect();
                let mut w2 = word.clone();
                w2.extend(row.iter().copied().filter(|&x| x > 0));
                *next.entry((rem2, w2)).or_insert(0) += mult;
            });
        }
        states = next;
    }
    for ((_, word), mult) in states {
        *out.entry(Composition::new(word)).or_insert(0) += mult;
    }
    out
}

/// The matrix rule as a linear combination.
pub fn matrix_rule(rows: &[usize], cols: &[usize]) -> Nsf {
    matrix_rule_counts(rows, cols).into_iter().map(|(c, m)| (c, Rational::from_integer(BigInt::from(m)))).collect()
}

fn fill_row(rem: &[usize], left: usize, k: usize, row: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
    if k == rem.len() {
        if left == 0 {
            emit(row);
        }
        return;
    }
    let cap: usize = rem[k + 1..].iter().sum();
    let lo = left.saturating_sub(cap);
    for x in lo..=left.min(rem[k]) {
        row[k] = x;
        fill_row(rem, left - x, k + 1, row, emit);
    }
    row[k] = 0;
}

/// Integer numerators over a common denominator.
fn integerize(t: &[(&Composition, &Rational)]) -> (Vec<BigInt>, BigInt) {
    let den = t.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let nums = t.iter().map(|(_, c)| c.numer() * (&den / c.denom())).collect();
    (nums, den)
}

/// Internal product of homogeneous combinations of the same weight `n`.
fn internal_homogeneous(n: usize, a: &[(&Composition, &Rational)], b: &[(&Composition, &Rational)]) -> Nsf {
    let (na, da) = integerize(a);
    let (nb, db) = integerize(b);
    let size = 1usize << n.saturating_sub(1);
    let small_a: Option<Vec<i128>> = na.iter().map(|x| x.to_i128()).collect();
    let small_b: Option<Vec<i128>> = nb.iter().map(|x| x.to_i128()).collect();
    let acc: Vec<BigInt> = match (small_a, small_b) {
        (Some(xa), Some(xb)) => match accumulate_small(size, a, &xa, b, &xb) {
            Some(v) => v.into_iter().map(BigInt::from).collect(),
            None => accumulate_big(size, a, &na, b, &nb),
        },
        _ => accumulate_big(size, a, &na, b, &nb),
    };
    let den = da * db;
    let mut out = Nsf::zero();
    for (m, x) in acc.into_iter().enumerate() {
        if !x.is_zero() {
            out.add_term(Composition::from_descent_mask(n, m as u64), Rational::new(x, den.clone()));
        }
    }
    out
}

fn accumulate_small(
    size: usize,
    a: &[(&Composition, &Rational)],
    xa: &[i128],
    b: &[(&Composition, &Rational)],
    xb: &[i128],
) -> Option<Vec<i128>> {
    let partial = |range: std::ops::Range<usize>| -> Option<Vec<i128>> {
        let mut acc = vec![0i128; size];
        for ia in range {
            for (ib, (j, _)) in b.iter().enumerate() {
                let w = xa[ia].checked_mul(xb[ib])?;
                for &(m, c) in table(a[ia].0, j).iter() {
                    let t = w.checked_mul(i128::try_from(c).ok()?)?;
                    acc[m as usize] = acc[m as usize].checked_add(t)?;
                }
            }
        }
        Some(acc)
    };
    if a.len() * b.len() < 256 {
        return partial(0..a.len());
    }
    let chunk = a.len().div_ceil(rayon::current_num_threads().max(1) * 4).max(1);
    let parts: Vec<Option<Vec<i128>>> = (0..a.len())
        .step_by(chunk)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|s| partial(s..(s + chunk).min(a.len())))
        .collect();
    let mut acc = vec![0i128; size];
    for p in parts {
        for (x, y) in acc.iter_mut().zip(p?) {
            *x = x.checked_add(y)?;
        }
    }
    Some(acc)
}

fn accumulate_big(
    size: usize,
    a: &[(&Composition, &Rational)],
    na: &[BigInt],
    b: &[(&Composition, &Rational)],
    nb: &[BigInt],
) -> Vec<BigInt> {
    let mut acc = vec![BigInt::zero(); size];
    for (ia, (i, _)) in a.iter().enumerate() {
        for (ib, (j, _)) in b.iter().enumerate() {
            let w = &na[ia] * &nb[ib];
            for &(m, c) in table(i, j).iter() {
                acc[m as usize] += &w * BigInt::from(c);
            }
        }
    }
    acc
}

/// Internal product in the `S` basis; components of different weights do not interact.
pub fn internal(a: &Nsf, b: &Nsf) -> Nsf {
    let mut by_weight_a: BTreeMap<usize, Vec<(&Composition, &Rational)>> = BTreeMap::new();
    for (i, c) in a.iter() {
        by_weight_a.entry(i.weight()).or_default().push((i, c));
    }
    let mut by_weight_b: BTreeMap<usize, Vec<(&Composition, &Rational)>> = BTreeMap::new();
    for (i, c) in b.iter() {
        by_weight_b.entry(i.weight()).or_default().push((i, c));
    }
    let mut out = Nsf::zero();
    for (n, ta) in &by_weight_a {
        if let Some(tb) = by_weight_b.get(n) {
            out += internal_homogeneous(*n, ta, tb);
        }
    }
    out
}
