//! Lower central series of `Sym` as an oracle for the radical layers.
//!
//! `γ^0 = Sym` and `γ^j` is the two-sided ideal generated by the commutators
//! `[S_k, y]`, `y ∈ γ^{j-1}`; its degree-`n` part is the `j`-th power of the
//! radical of `(Sym_n, *)`.

use crate::combinatorics::Composition;
use crate::exact::Span;
use crate::nsym::element::outer;
use crate::nsym::Nsf;
use crate::{Error, Result};

pub const RADICAL_MAX_N: usize = 6;

pub struct LowerCentralSeries {
    n: usize,
    /// `bases[j][m]`: a basis of `γ^j` in degree `m`.
    bases: Vec<Vec<Vec<Nsf>>>,
}

impl LowerCentralSeries {
    pub fn new(n: usize, jmax: usize) -> Result<Self> {
        if n > RADICAL_MAX_N {
            return Err(Error::CostGuard { what: "radical filtration", n, limit: RADICAL_MAX_N });
        }
        let full: Vec<Vec<Nsf>> = (0..=n).map(|m| Composition::all(m).into_iter().map(Nsf::basis).collect()).collect();
        let mut bases = vec![full];
        for _ in 1..=jmax {
            let prev = bases.last().expect("nonempty");
            let mut next = vec![Vec::new(); n + 1];
            for (m, slot) in next.iter_mut().enumerate() {
                let mut span = Span::new();
                for (r, ys) in prev.iter().enumerate().take(m).skip(1) {
                    for y in ys {
                        for k in 1..=m - r {
                            let sk = Nsf::basis(Composition::single(k));
                            let comm = &outer(&sk, y) - &outer(y, &sk);
                            if comm.is_zero() {
                                continue;
                            }
                            let rest = m - r - k;
                            for a in 0..=rest {
                                for ca in Composition::all(a) {
                                    for cb in Composition::all(rest - a) {
                                        let g = outer(&outer(&Nsf::basis(ca.clone()), &comm), &Nsf::basis(cb));
                                        if span.insert(&g) {
                                            slot.push(g);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            bases.push(next);
        }
        Ok(LowerCentralSeries { n, bases })
    }

    pub fn dim(&self, j: usize, m: usize) -> usize {
        self.bases[j][m].len()
    }

    pub fn contains(&self, j: usize, x: &Nsf) -> bool {
        let mut s = Span::new();
        for v in &self.bases[j][self.n] {
            s.insert(v);
        }
        s.contains(x)
    }
}

/// `dim γ^j(Sym)_n` for `j = 0..=jmax`.
pub fn radical_filtration_oracle(n: usize, jmax: usize) -> Result<Vec<usize>> {
    let s = LowerCentralSeries::new(n, jmax)?;
    Ok((0..=jmax).map(|j| s.dim(j, n)).collect())
}

/// Largest `j <= jmax` with `x ∈ γ^j`, or `None` for `x = 0`.
pub fn radical_layer(series: &LowerCentralSeries, x: &Nsf, jmax: usize) -> Option<usize> {
    if x.is_zero() {
        return None;
    }
    (0..=jmax).take_while(|&j| series.contains(j, x)).last()
}
