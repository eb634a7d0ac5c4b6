//! `q`-Cartan matrices.
//!
//! `c_{λμ} = dim (e_μ * A * e_λ) = dim span{e_μ * e_I : I ∈ S(λ)}`, with the
//! Zassenhaus idempotents, and the `q`-grading puts `c_{λμ}` in degree
//! `ℓ(λ) - ℓ(μ)`. Rows are indexed by `μ`, columns by `λ`.

use std::collections::BTreeMap;
use std::fmt::Write;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::lie_dims::symmetrized_lie_contents;
use crate::combinatorics::{Composition, Partition, SetPartition};
use crate::exact::{rank, QPoly, Rational};
use crate::nsym::{increasing, zassenhaus, Nsf};
use crate::{Error, Result};

/// Row and column labels of a Cartan matrix.
pub trait CartanLabel: Clone + PartialEq {
    fn label(&self) -> String;
}

impl CartanLabel for Partition {
    fn label(&self) -> String {
        if self.is_empty() {
            "()".into()
        } else {
            self.to_string()
        }
    }
}

impl CartanLabel for SetPartition {
    fn label(&self) -> String {
        if self.num_blocks() == 0 {
            "()".into()
        } else {
            self.to_string()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMatrix<L = Partition> {
    pub labels: Vec<L>,
    /// `entries[row][col]`.
    pub entries: Vec<Vec<QPoly>>,
}

impl<L: CartanLabel> CartanMatrix<L> {
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, l: &L) -> Option<usize> {
        self.labels.iter().position(|x| x == l)
    }

    /// `c_{λμ}(q)`: row `μ`, column `λ`.
    pub fn entry(&self, lambda: &L, mu: &L) -> QPoly {
        match (self.index_of(mu), self.index_of(lambda)) {
            (Some(r), Some(c)) => self.entries[r][c].clone(),
            _ => QPoly::zero(),
        }
    }

    pub fn at_one(&self) -> Vec<Vec<Rational>> {
        let one = Rational::from_integer(1.into());
        self.entries.iter().map(|r| r.iter().map(|e| e.eval(&one)).collect()).collect()
    }

    /// Sum of all entries.
    pub fn total(&self) -> QPoly {
        self.entries.iter().flatten().fold(QPoly::zero(), |acc, e| &acc + e)
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.size()).all(|r| (0..r).all(|c| self.entries[r][c].is_zero()))
    }

    /// Block-diagonal sum.
    pub fn direct_sum(blocks: &[CartanMatrix<L>]) -> CartanMatrix<L> {
        let labels: Vec<L> = blocks.iter().flat_map(|b| b.labels.clone()).collect();
        let n = labels.len();
        let mut entries = vec![vec![QPoly::zero(); n]; n];
        let mut off = 0;
        for b in blocks {
            for (r, row) in b.entries.iter().enumerate() {
                for (c, e) in row.iter().enumerate() {
                    entries[off + r][off + c] = e.clone();
                }
            }
            off += b.size();
        }
        CartanMatrix { labels, entries }
    }

    /// Entry strings with `.` for zero.
    pub fn cells(&self) -> Vec<Vec<String>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|e| if e.is_zero() { ".".into() } else { e.to_string() }).collect())
            .collect()
    }

    /// Aligned text: a header row of labels, then one row per label.
    pub fn render_text(&self) -> String {
        let cells = self.cells();
        let labels: Vec<String> = self.labels.iter().map(CartanLabel::label).collect();
        let lw = labels.iter().map(|s| s.len()).max().unwrap_or(0);
        let widths: Vec<usize> = (0..self.size())
            .map(|c| cells.iter().map(|r| r[c].len()).chain([labels[c].len()]).max().unwrap_or(1))
            .collect();
        let mut s = String::new();
        let _ = write!(s, "{:lw$}", "");
        for (c, l) in labels.iter().enumerate() {
            let _ = write!(s, "  {:>w$}", l, w = widths[c]);
        }
        s.push('\n');
        for (r, row) in cells.iter().enumerate() {
            let _ = write!(s, "{:<lw$}", labels[r]);
            for (c, x) in row.iter().enumerate() {
                let _ = write!(s, "  {:>w$}", x, w = widths[c]);
            }
            s.push('\n');
        }
        s
    }

    pub fn to_json(&self) -> Value {
        json!({
            "labels": self.labels.iter().map(CartanLabel::label).collect::<Vec<_>>(),
            "entries": self.entries.iter().map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("label");
        for l in &self.labels {
            s.push(',');
            s.push_str(&l.label());
        }
        s.push('\n');
        for (l, row) in self.labels.iter().zip(&self.entries) {
            s.push_str(&l.label());
            for e in row {
                s.push(',');
                s.push_str(&e.to_string());
            }
            s.push('\n');
        }
        s
    }
}

fn q_entry(c: usize, lambda: &Partition, mu: &Partition) -> Result<QPoly> {
    if c == 0 {
        return Ok(QPoly::zero());
    }
    if lambda.len() < mu.len() {
        return Err(Error::Consistency(format!("nonzero Cartan invariant c({lambda},{mu}) below the diagonal")));
    }
    Ok(QPoly::monomial((lambda.len() - mu.len()) as u32, Rational::from_integer(c.into())))
}

/// Span method over the given labels (partitions of one `n`).
pub fn cartan_span(labels: &[Partition]) -> Result<CartanMatrix> {
    let n = labels.first().map_or(0, |l| l.weight());
    let fam = zassenhaus(n.max(1));
    let power = |i: &Composition| -> Nsf { fam.power(i) };
    // e_μ up to scalars
    let left: Vec<Nsf> = labels.iter().map(|m| power(&increasing(m))).collect();
    let cols: Vec<Vec<Composition>> = labels.iter().map(|l| l.as_composition().rearrangements()).collect();
    let right: BTreeMap<Composition, Nsf> = cols.iter().flatten().map(|i| (i.clone(), power(i))).collect();
    let jobs: Vec<(usize, usize)> = (0..labels.len()).flat_map(|r| (0..labels.len()).map(move |c| (r, c))).collect();
    let dims: Vec<usize> = jobs
        .par_iter()
        .map(|&(r, c)| {
            let prods: Vec<Nsf> = cols[c].iter().map(|i| crate::nsym::element::internal(&left[r], &right[i])).collect();
            rank(&prods)
        })
        .collect();
    let mut entries = vec![vec![QPoly::zero(); labels.len()]; labels.len()];
    for (&(r, c), &d) in jobs.iter().zip(&dims) {
        entries[r][c] = q_entry(d, &labels[c], &labels[r])?;
    }
    Ok(CartanMatrix { labels: labels.to_vec(), entries })
}

/// Lie-dimension method over the given labels.
pub fn cartan_lie(labels: &[Partition]) -> CartanMatrix {
    let mut entries = vec![vec![QPoly::zero(); labels.len()]; labels.len()];
    for (r, mu) in labels.iter().enumerate() {
        let contents = symmetrized_lie_contents(mu);
        for (c, lambda) in labels.iter().enumerate() {
            let d = contents.get(lambda).copied().unwrap_or(0) as usize;
            entries[r][c] = q_entry(d, lambda, mu).expect("Lie contents respect lengths");
        }
    }
    CartanMatrix { labels: labels.to_vec(), entries }
}

/// `D^(0)_n`: partitions of `n` without part 1, reverse lexicographic.
pub fn cartan_d0(n: usize) -> Result<CartanMatrix> {
    cartan_span(&Partition::all_without_ones(n))
}

pub fn cartan_d0_lie(n: usize) -> CartanMatrix {
    cartan_lie(&Partition::all_without_ones(n))
}

/// `Sym_n`: all partitions of `n`, reverse lexicographic.
pub fn cartan_sym(n: usize) -> Result<CartanMatrix> {
    cartan_span(&Partition::all(n))
}

pub fn cartan_sym_lie(n: usize) -> CartanMatrix {
    cartan_lie(&Partition::all(n))
}

/// Partitions of `n` with at most `k` ones, by number of ones then reverse lexicographic.
pub fn dk_labels(n: usize, k: Option<usize>) -> Vec<Partition> {
    let top = k.map_or(n, |k| k.min(n));
    (0..=top).flat_map(|i| Partition::all_without_ones(n - i).into_iter().map(move |l| l.with_ones(i))).collect()
}

/// Block-diagonal assembly from the `D^(0)_{n-i}`, `i <= min(k, n)`.
pub fn cartan_dk(n: usize, k: Option<usize>) -> Result<CartanMatrix> {
    dk_blocks(n, k, cartan_d0)
}

/// Same assembly with the Lie-dimension blocks.
pub fn cartan_dk_lie(n: usize, k: Option<usize>) -> CartanMatrix {
    dk_blocks(n, k, |m| Ok(cartan_d0_lie(m))).expect("infallible")
}

fn dk_blocks(n: usize, k: Option<usize>, block: impl Fn(usize) -> Result<CartanMatrix>) -> Result<CartanMatrix> {
    let top = k.map_or(n, |k| k.min(n));
    let mut blocks = Vec::new();
    for i in 0..=top {
        let mut b = block(n - i)?;
        b.labels = b.labels.iter().map(|l| l.with_ones(i)).collect();
        blocks.push(b);
    }
    Ok(CartanMatrix::direct_sum(&blocks))
}

/// `Sym_n` restricted to the labels of `D^(k)_n`, with entries between
/// different numbers of ones set to zero.
pub fn cartan_dk_from_sym(sym: &CartanMatrix, k: Option<usize>) -> CartanMatrix {
    let n = sym.labels.first().map_or(0, |l| l.weight());
    let labels = dk_labels(n, k);
    let entries = labels
        .iter()
        .map(|mu| {
            labels
                .iter()
                .map(|lam| if lam.multiplicity(1) == mu.multiplicity(1) { sym.entry(lam, mu) } else { QPoly::zero() })
                .collect()
        })
        .collect();
    CartanMatrix { labels, entries }
}

/// Sums of the entries of the `q`-Cartan matrices of `D^(∞)_n`, `1 <= n <= up_to`.
pub fn q_dimension_polynomials(up_to: usize) -> Vec<QPoly> {
    let blocks: Vec<QPoly> = (0..=up_to).map(|m| cartan_d0_lie(m).total()).collect();
    (1..=up_to).map(|n| blocks[..=n].iter().fold(QPoly::zero(), |acc, b| &acc + b)).collect()
}

/// Coefficient rows `[c_0, c_1, ...]` of the polynomials.
pub fn triangle_rows(polys: &[QPoly]) -> Vec<Vec<i64>> {
    use num_traits::ToPrimitive;
    polys.iter().map(|p| p.dense().iter().map(|c| c.to_integer().to_i64().expect("small integer")).collect()).collect()
}
