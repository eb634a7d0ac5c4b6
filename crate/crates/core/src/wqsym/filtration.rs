//! `V_n^(k) = ⊕_{j <= k} D_{n,j} * W_n * D_{n,j}`.

use crate::exact::modp::ModEchelon;
use crate::exact::Span;
use crate::nsym::d_nk;
use crate::{Error, Result};

use super::dense::{is_zero, to_mod, Table, TABLE_MAX_N};
use super::element::{embed, WqsymElement};

pub const V_FILTRATION_MAX_N: usize = 5;
/// Pairwise closure is checked up to this degree.
pub const V_CLOSURE_MAX_N: usize = 4;

#[derive(Clone, Debug)]
pub struct VFiltration {
    pub n: usize,
    pub k: usize,
    /// `dim D_{n,j} * W_n * D_{n,j}` for `j = 0..=min(k, n)`.
    pub block_dims: Vec<usize>,
    pub basis: Vec<WqsymElement>,
    /// `Σ_{j <= k} D_{n,j}`.
    pub neutral: WqsymElement,
    pub unital: bool,
    /// `None` above [`V_CLOSURE_MAX_N`].
    pub closed: Option<bool>,
}

impl VFiltration {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

pub fn v_filtration(n: usize, k: usize) -> Result<VFiltration> {
    if n > V_FILTRATION_MAX_N.min(TABLE_MAX_N) {
        return Err(Error::CostGuard { what: "v_filtration", n, limit: V_FILTRATION_MAX_N });
    }
    let t = Table::new(n)?;
    let top = k.min(n);
    let mut all = ModEchelon::new(t.len());
    let mut basis_int: Vec<(i128, Vec<i128>)> = Vec::new();
    let mut block_dims = Vec::new();
    let mut neutral = WqsymElement::zero(n);
    for j in 0..=top {
        let d = embed(&d_nk(n, j));
        neutral = &neutral + &d;
        let (den, dv) = t.element_vector(&d);
        // A basis of W_n * D_{n,j}, then its left translates by D_{n,j}.
        let mut right = ModEchelon::new(t.len());
        let mut gens = Vec::new();
        for u in 0..t.len() {
            let mut e = vec![0i128; t.len()];
            e[u] = 1;
            let y = t.mul(&e, &dv);
            if right.insert(to_mod(&y)) {
                gens.push(y);
            }
        }
        let mut block = ModEchelon::new(t.len());
        for y in gens {
            let z = t.mul(&dv, &y);
            if is_zero(&z) {
                continue;
            }
            if block.insert(to_mod(&z)) {
                all.insert(to_mod(&z));
                basis_int.push((den * den, z));
            }
        }
        block_dims.push(block.rank());
    }
    let basis: Vec<WqsymElement> = basis_int.iter().map(|(d, v)| t.from_integer_vector(*d, v)).collect();
    let (nden, nv) = t.element_vector(&neutral);
    let unital = basis_int.iter().all(|(_, v)| {
        let scaled: Vec<i128> = v.iter().map(|c| c * nden).collect();
        t.mul(&nv, v) == scaled && t.mul(v, &nv) == scaled
    }) && all.contains(&to_mod(&nv));
    let closed = (n <= V_CLOSURE_MAX_N).then(|| {
        let mut span = Span::new();
        for b in &basis {
            span.insert(b.terms());
        }
        basis.iter().all(|a| basis.iter().all(|b| span.contains(a.internal_product(b).terms())))
    });
    Ok(VFiltration { n, k, block_dims, basis, neutral, unital, closed })
}
