//! Eigenvectors of the Tsetlin library built from Lie polynomials.
//!
//! A multilinear polynomial `Σ c_w w` is read as `Σ c_w G_w`. Since
//! `G_σ * G_τ = G_{τσ}`, the group algebra product `f · τ_n` (moving one letter
//! of every word to the front, in all ways) is `T_n * f` here.

use crate::combinatorics::Permutation;
use crate::exact::{LinComb, Rational};
use crate::{Error, Result};

use super::element::{FqsymBasis, FqsymElement};
use super::tsetlin::{spectrum, t_n};

type Poly = LinComb<Vec<usize>>;

pub const EIGENBASIS_MAX_N: usize = 7;

fn letter(a: usize) -> Poly {
    Poly::basis(vec![a])
}

fn concat(x: &Poly, y: &Poly) -> Poly {
    x.bilinear(y, |u, v| {
        let mut w = u.clone();
        w.extend_from_slice(v);
        Poly::basis(w)
    })
}

fn bracket(x: &Poly, y: &Poly) -> Poly {
    &concat(x, y) - &concat(y, x)
}

/// `[[...[c_1, c_2], c_3], ..., c_k]`.
pub fn left_bracketing(letters: &[usize]) -> Poly {
    let mut p = letter(letters[0]);
    for &a in &letters[1..] {
        p = bracket(&p, &letter(a));
    }
    p
}

/// Sum of the concatenations of the factors in every order.
pub fn symmetrized(factors: &[Poly]) -> Poly {
    if factors.is_empty() {
        return Poly::basis(Vec::new());
    }
    let mut out = Poly::zero();
    for i in 0..factors.len() {
        let mut rest = factors.to_vec();
        let f = rest.remove(i);
        out += concat(&f, &symmetrized(&rest));
    }
    out
}

/// Set partitions of `letters` into blocks of size at least 2, each block
/// followed by every cyclic arrangement that starts with its minimum.
fn derangement_cycles(letters: &[usize]) -> Vec<Vec<Vec<usize>>> {
    if letters.is_empty() {
        return vec![Vec::new()];
    }
    let m = letters[0];
    let rest = &letters[1..];
    let mut out = Vec::new();
    for size in 1..=rest.len() {
        for chosen in subsets(rest, size) {
            let others: Vec<usize> = rest.iter().copied().filter(|x| !chosen.contains(x)).collect();
            let tails = derangement_cycles(&others);
            for arr in arrangements(&chosen) {
                let mut cyc = vec![m];
                cyc.extend(arr);
                for t in &tails {
                    let mut cs = vec![cyc.clone()];
                    cs.extend(t.iter().cloned());
                    out.push(cs);
                }
            }
        }
    }
    out
}

fn subsets(xs: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if xs.len() < k {
        return Vec::new();
    }
    let mut out: Vec<Vec<usize>> = subsets(&xs[1..], k - 1)
        .into_iter()
        .map(|mut s| {
            s.insert(0, xs[0]);
            s
        })
        .collect();
    out.extend(subsets(&xs[1..], k));
    out
}

fn arrangements(xs: &[usize]) -> Vec<Vec<usize>> {
    if xs.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..xs.len() {
        let mut rest = xs.to_vec();
        let x = rest.remove(i);
        for mut a in arrangements(&rest) {
            a.insert(0, x);
            out.push(a);
        }
    }
    out
}

fn to_element(n: usize, p: &Poly) -> FqsymElement {
    let t = p.map_keys(|w| Permutation::new(w.clone()));
    FqsymElement::new(n, FqsymBasis::G, t)
}

/// `(j_1 ⧢ ... ⧢ j_s) · (γ_1 θ_{λ_1}, ..., γ_r θ_{λ_r})` over all choices of
/// the `s` fixed letters and all derangements of the others.
///
/// Every element `x` satisfies `T_n * x = s x`; there are `d_{n,s}` of them.
pub fn lie_eigenbasis(n: usize, s: usize) -> Result<Vec<FqsymElement>> {
    if n > EIGENBASIS_MAX_N {
        return Err(Error::CostGuard { what: "lie_eigenbasis", n, limit: EIGENBASIS_MAX_N });
    }
    if !spectrum(n).contains(&s) {
        return Err(Error::Invalid(format!("{s} is not an eigenvalue of T_{n}")));
    }
    let all: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    for fixed in subsets(&all, s) {
        let shuffle = symmetrized(&fixed.iter().map(|&a| letter(a)).collect::<Vec<_>>());
        let others: Vec<usize> = all.iter().copied().filter(|x| !fixed.contains(x)).collect();
        for cycles in derangement_cycles(&others) {
            let lie: Vec<Poly> = cycles.iter().map(|c| left_bracketing(c)).collect();
            out.push(to_element(n, &concat(&shuffle, &symmetrized(&lie))));
        }
    }
    Ok(out)
}

/// `T_n * x - s x == 0`.
pub fn is_eigenvector(x: &FqsymElement, s: usize) -> bool {
    let n = x.degree();
    (&t_n(n).internal_product(x) - &x.scale(&Rational::from_integer(s.into()))).is_zero()
}
