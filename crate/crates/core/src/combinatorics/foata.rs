//! Foata's transformation, the left weak order and the ideals `X_n^(k)`.

use std::collections::BTreeSet;

use super::{Composition, Permutation};
use crate::{Error, Result};

/// Cuts `σ` before each left-right minimum and reads every factor as a cycle.
pub fn foata_phi(sigma: &Permutation) -> Permutation {
    let w = sigma.word();
    let mins = sigma.lr_minima();
    let mut cycles = Vec::with_capacity(mins.len());
    for (k, &start) in mins.iter().enumerate() {
        let end = mins.get(k + 1).map_or(w.len(), |&e| e - 1);
        cycles.push(w[start - 1..end].to_vec());
    }
    Permutation::from_cycles(w.len(), &cycles)
}

/// Inverse of [`foata_phi`]: cycles led by their minimum, by decreasing minimum.
pub fn foata_phi_inv(pi: &Permutation) -> Permutation {
    let mut cycles = pi.cycles();
    cycles.sort_by(|a, b| b[0].cmp(&a[0]));
    Permutation::new(cycles.concat())
}

/// Number of adjacent positions `(i, i+1)` of `σ·0` that are both left-right minima.
///
/// This equals the number of fixed points of `foata_phi(σ)`.
pub fn consecutive_lr_min_stat(sigma: &Permutation) -> usize {
    let mut mins = sigma.lr_minima();
    mins.push(sigma.len() + 1);
    mins.windows(2).filter(|p| p[1] == p[0] + 1).count()
}

/// Alternative reading of "k consecutive LR-minima": number of maximal runs of
/// length at least two among the LR-minima of `σ·0`.
pub fn lr_min_runs_stat(sigma: &Permutation) -> usize {
    let mut mins = sigma.lr_minima();
    mins.push(sigma.len() + 1);
    let mut runs = 0;
    let mut len = 1;
    for p in mins.windows(2) {
        if p[1] == p[0] + 1 {
            len += 1;
        } else {
            if len > 1 {
                runs += 1;
            }
            len = 1;
        }
    }
    if len > 1 {
        runs += 1;
    }
    runs
}

/// Which side the weak order multiplies by simple transpositions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeakSide {
    /// `σ → s_i σ`: exchanges the values `i` and `i+1`.
    Left,
    /// `σ → σ s_i`: exchanges the letters in positions `i` and `i+1`.
    Right,
}

/// Inversion-set inclusion in the weak order on the given side.
pub fn weak_order_leq_side(sigma: &Permutation, tau: &Permutation, side: WeakSide) -> Result<bool> {
    if sigma.len() != tau.len() {
        return Err(Error::LengthMismatch(sigma.len(), tau.len()));
    }
    let (a, b) = match side {
        // Exchanging values adds a pair of positions to the inversion set, and
        // exchanging positions adds a pair of values.
        WeakSide::Left => (sigma.position_inversions(), tau.position_inversions()),
        WeakSide::Right => (sigma.value_inversions(), tau.value_inversions()),
    };
    let b: BTreeSet<_> = b.into_iter().collect();
    Ok(a.iter().all(|x| b.contains(x)))
}

/// The left weak order.
pub fn weak_order_leq(sigma: &Permutation, tau: &Permutation) -> Result<bool> {
    weak_order_leq_side(sigma, tau, WeakSide::Left)
}

/// Upper covers of `σ` in the weak order on the given side.
pub fn weak_covers(sigma: &Permutation, side: WeakSide) -> Vec<Permutation> {
    let n = sigma.len();
    let mut out = Vec::new();
    for i in 1..n {
        let s = simple_transposition(n, i);
        let up = match side {
            WeakSide::Left => s.compose(sigma),
            WeakSide::Right => sigma.compose(&s),
        };
        if up.inversions() == sigma.inversions() + 1 {
            out.push(up);
        }
    }
    out
}

pub fn simple_transposition(n: usize, i: usize) -> Permutation {
    let mut w: Vec<usize> = (1..=n).collect();
    w.swap(i - 1, i);
    Permutation::new(w)
}

/// `X_n^(k)`: permutations whose statistic is at most `k` (`None` means no bound).
pub fn x_set(n: usize, k: Option<usize>) -> Vec<Permutation> {
    Permutation::all(n).into_iter().filter(|s| k.is_none_or(|k| consecutive_lr_min_stat(s) <= k)).collect()
}

/// Maximal elements of a subset for the weak order on the given side.
pub fn weak_maxima(set: &[Permutation], side: WeakSide) -> Vec<Permutation> {
    let members: BTreeSet<&Permutation> = set.iter().collect();
    let mut out: Vec<Permutation> =
        set.iter().filter(|s| weak_covers(s, side).iter().all(|t| !members.contains(t))).cloned().collect();
    out.sort();
    out
}

/// `w_i = 1 i i-1 ... 2`.
pub fn w_block(i: usize) -> Permutation {
    let mut w = vec![1];
    w.extend((2..=i).rev());
    Permutation::new(w)
}

/// `w_I = w_{i_1} ▶ ... ▶ w_{i_r}`.
pub fn w_of(comp: &Composition) -> Permutation {
    let mut acc = Permutation::identity(0);
    for &p in comp.parts().iter().rev() {
        acc = w_block(p).left_shifted_concat(&acc);
    }
    acc
}

/// Compositions indexing the maximal elements of `X_n^(k)`: either `k-1` ones
/// and all other parts equal to 2, or exactly `k` ones (other parts at least 2).
/// `None` stands for `k = ∞`, whose only maximal element is `n n-1 ... 1`.
pub fn maximal_compositions(n: usize, k: Option<usize>) -> Vec<Composition> {
    let Some(k) = k else {
        return vec![Composition::ones(n)];
    };
    if k >= n {
        return vec![Composition::ones(n)];
    }
    let mut out: Vec<Composition> = Composition::all(n)
        .into_iter()
        .filter(|c| {
            let ones = c.count_part(1);
            ones == k || (k >= 1 && ones == k - 1 && c.parts().iter().all(|&p| p <= 2))
        })
        .collect();
    out.sort();
    out
}

/// Maximal elements of `X_n^(k)` for the left weak order.
pub fn maximal_elements_x(n: usize, k: Option<usize>) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = maximal_compositions(n, k).iter().map(w_of).collect();
    out.sort();
    out.dedup();
    out
}

fn binom(n: i64, k: i64) -> u64 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Number of compositions of `m` into `l` parts all at least 2.
fn compositions_at_least_two(m: usize, l: usize) -> u64 {
    if l == 0 {
        return u64::from(m == 0);
    }
    binom(m as i64 - l as i64 - 1, l as i64 - 1)
}

/// `m_{n,k}` by the closed formula
/// `C((n+k-1)/2, k-1) + Σ_{l=0}^{⌊(n-k)/2⌋} C(l+k, k) C(n-k-l-1, l-1)`,
/// where the `l = 0` term counts the empty composition (so `m_{n,n} = 1`).
pub fn m_count(n: usize, k: usize) -> u64 {
    assert!(k <= n, "m_count needs k <= n");
    let first = if (n + k) % 2 == 1 && k >= 1 { binom(((n + k - 1) / 2) as i64, k as i64 - 1) } else { 0 };
    let rest: u64 =
        (0..=(n - k) / 2).map(|l| binom((l + k) as i64, k as i64) * compositions_at_least_two(n - k, l)).sum();
    first + rest
}

/// The closed formula with the literal convention that every binomial with an
/// entry outside the natural numbers vanishes (including `C(-1, -1)`).
pub fn m_count_literal(n: usize, k: usize) -> u64 {
    let first = if (n + k) % 2 == 1 && k >= 1 { binom(((n + k - 1) / 2) as i64, k as i64 - 1) } else { 0 };
    let rest: u64 = (0..=(n - k) / 2)
        .map(|l| binom((l + k) as i64, k as i64) * binom(n as i64 - k as i64 - l as i64 - 1, l as i64 - 1))
        .sum();
    first + rest
}
