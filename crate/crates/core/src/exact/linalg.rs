//! Exact sparse linear algebra over the rationals.
//!
//! Elimination runs on `Ratio<i128>` with checked arithmetic and switches to
//! arbitrary precision the first time an operation would overflow, so results
//! never depend on the fast path.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, One, ToPrimitive, Zero};

use super::{LinComb, Rational};

type Small = Ratio<i128>;

trait Scalar: Clone {
    fn s_is_zero(&self) -> bool;
    fn s_zero() -> Self;
    fn sub_mul(&self, c: &Self, p: &Self) -> Option<Self>;
    fn div(&self, d: &Self) -> Option<Self>;
}

impl Scalar for Small {
    fn s_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn s_zero() -> Self {
        Zero::zero()
    }
    fn sub_mul(&self, c: &Self, p: &Self) -> Option<Self> {
        self.checked_sub(&c.checked_mul(p)?)
    }
    fn div(&self, d: &Self) -> Option<Self> {
        self.checked_div(d)
    }
}

impl Scalar for Rational {
    fn s_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn s_zero() -> Self {
        Zero::zero()
    }
    fn sub_mul(&self, c: &Self, p: &Self) -> Option<Self> {
        Some(self - c * p)
    }
    fn div(&self, d: &Self) -> Option<Self> {
        Some(self / d)
    }
}

fn to_small(r: &Rational) -> Option<Small> {
    Some(Small::new_raw(r.numer().to_i128()?, r.denom().to_i128()?))
}

fn to_big(r: &Small) -> Rational {
    Rational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

type Row<T> = Vec<(usize, T)>;

/// `v - c * p` for sorted sparse rows.
fn axpy<T: Scalar>(v: &[(usize, T)], c: &T, p: &[(usize, T)]) -> Option<Row<T>> {
    let mut out = Vec::with_capacity(v.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < p.len() {
        if j == p.len() || (i < v.len() && v[i].0 < p[j].0) {
            out.push(v[i].clone());
            i += 1;
        } else if i == v.len() || p[j].0 < v[i].0 {
            let x = T::s_zero().sub_mul(c, &p[j].1)?;
            out.push((p[j].0, x));
            j += 1;
        } else {
            let x = v[i].1.sub_mul(c, &p[j].1)?;
            if !x.s_is_zero() {
                out.push((v[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

/// Row-echelon basis with pivots normalized to one.
struct Echelon<T> {
    pivots: BTreeMap<usize, Row<T>>,
}

impl<T: Scalar> Echelon<T> {
    fn new() -> Self {
        Echelon { pivots: BTreeMap::new() }
    }

    fn reduce(&self, mut v: Row<T>) -> Option<Row<T>> {
        let mut pos = 0;
        while pos < v.len() {
            let col = v[pos].0;
            if let Some(p) = self.pivots.get(&col) {
                let c = v[pos].1.clone();
                let tail = axpy(&v[pos..], &c, p)?;
                v.truncate(pos);
                v.extend(tail);
            } else {
                pos += 1;
            }
        }
        Some(v)
    }

    /// Inserts a reduced nonzero row.
    fn push_reduced(&mut self, v: Row<T>) -> Option<()> {
        let lead = v[0].1.clone();
        let row: Row<T> = v.into_iter().map(|(c, x)| x.div(&lead).map(|y| (c, y))).collect::<Option<_>>()?;
        self.pivots.insert(row[0].0, row);
        Some(())
    }
}

enum Engine {
    Small(Echelon<Small>),
    Big(Echelon<Rational>),
}

/// An incrementally built subspace of `Q^(columns)`.
pub struct RowSpace {
    engine: Engine,
}

impl Default for RowSpace {
    fn default() -> Self {
        Self::new()
    }
}

impl RowSpace {
    pub fn new() -> Self {
        RowSpace { engine: Engine::Small(Echelon::new()) }
    }

    pub fn dim(&self) -> usize {
        match &self.engine {
            Engine::Small(e) => e.pivots.len(),
            Engine::Big(e) => e.pivots.len(),
        }
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        match &self.engine {
            Engine::Small(e) => e.pivots.keys().copied().collect(),
            Engine::Big(e) => e.pivots.keys().copied().collect(),
        }
    }

    fn promote(&mut self) {
        if let Engine::Small(e) = &self.engine {
            let pivots =
                e.pivots.iter().map(|(k, row)| (*k, row.iter().map(|(c, x)| (*c, to_big(x))).collect())).collect();
            self.engine = Engine::Big(Echelon { pivots });
        }
    }

    /// Reduces `v` (sorted by column) modulo the space.
    fn reduce_big(&mut self, v: &[(usize, Rational)]) -> (Row<Rational>, Option<Row<Small>>) {
        if let Engine::Small(e) = &self.engine {
            let small: Option<Row<Small>> = v.iter().map(|(c, x)| to_small(x).map(|y| (*c, y))).collect();
            if let Some(r) = small.and_then(|s| e.reduce(s)) {
                let big = r.iter().map(|(c, x)| (*c, to_big(x))).collect();
                return (big, Some(r));
            }
            self.promote();
        }
        match &self.engine {
            Engine::Big(e) => (e.reduce(v.to_vec()).expect("big arithmetic never overflows"), None),
            Engine::Small(_) => unreachable!(),
        }
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[(usize, Rational)]) -> bool {
        let (big, small) = self.reduce_big(v);
        if big.is_empty() {
            return false;
        }
        if let (Engine::Small(e), Some(s)) = (&mut self.engine, small) {
            if e.push_reduced(s).is_some() {
                return true;
            }
            self.promote();
        }
        match &mut self.engine {
            Engine::Big(e) => e.push_reduced(big).expect("big arithmetic never overflows"),
            Engine::Small(_) => unreachable!(),
        }
        true
    }

    pub fn contains(&mut self, v: &[(usize, Rational)]) -> bool {
        self.reduce_big(v).0.is_empty()
    }
}

/// A sparse rational matrix stored by rows.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    pub nrows: usize,
    pub ncols: usize,
    rows: Vec<BTreeMap<usize, Rational>>,
}

impl SparseMatrix {
    pub fn new(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, ncols, rows: vec![BTreeMap::new(); nrows] }
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::new(rows.len(), ncols);
        for (i, r) in rows.iter().enumerate() {
            for (j, x) in r.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn set(&mut self, i: usize, j: usize, x: Rational) {
        assert!(i < self.nrows && j < self.ncols, "index out of range");
        if x.is_zero() {
            self.rows[i].remove(&j);
        } else {
            self.rows[i].insert(j, x);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.rows[i].get(&j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn row(&self, i: usize) -> Vec<(usize, Rational)> {
        self.rows[i].iter().map(|(c, x)| (*c, x.clone())).collect()
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn rank(&self) -> usize {
        rank_rows(self.rows.iter().map(|r| r.iter().map(|(c, x)| (*c, x.clone())).collect::<Vec<_>>()))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::new(self.ncols, self.nrows);
        for (i, r) in self.rows.iter().enumerate() {
            for (j, x) in r {
                t.rows[*j].insert(i, x.clone());
            }
        }
        t
    }
}

/// Exact rank of a family of sparse rows (each sorted by column).
pub fn rank_rows<I: IntoIterator<Item = Vec<(usize, Rational)>>>(rows: I) -> usize {
    let mut rows: Vec<_> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    // Sparse rows first keeps fill-in low.
    rows.sort_by_key(|r| r.len());
    let mut space = RowSpace::new();
    for r in rows {
        space.insert(&r);
    }
    space.dim()
}

/// Assigns dense column indices to the keys of a family of linear combinations.
pub struct KeyIndex<K: Ord> {
    index: BTreeMap<K, usize>,
}

impl<K: Ord + Clone> Default for KeyIndex<K> {
    fn default() -> Self {
        KeyIndex { index: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> KeyIndex<K> {
    pub fn new() -> Self {
        Self::default()
    }

    /// A fixed ordered key list (e.g. a whole basis).
    pub fn from_keys<I: IntoIterator<Item = K>>(keys: I) -> Self {
        let mut idx = Self::new();
        for k in keys {
            idx.id(&k);
        }
        idx
    }

    pub fn id(&mut self, k: &K) -> usize {
        let n = self.index.len();
        *self.index.entry(k.clone()).or_insert(n)
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn row(&mut self, v: &LinComb<K>) -> Vec<(usize, Rational)> {
        let mut r: Vec<_> = v.iter().map(|(k, c)| (self.id(k), c.clone())).collect();
        r.sort_by_key(|e| e.0);
        r
    }
}

/// Subspace spanned by linear combinations over an arbitrary ordered basis.
pub struct Span<K: Ord> {
    keys: KeyIndex<K>,
    space: RowSpace,
}

impl<K: Ord + Clone> Default for Span<K> {
    fn default() -> Self {
        Span { keys: KeyIndex::new(), space: RowSpace::new() }
    }
}

impl<K: Ord + Clone> Span<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, v: &LinComb<K>) -> bool {
        let r = self.keys.row(v);
        self.space.insert(&r)
    }

    pub fn contains(&mut self, v: &LinComb<K>) -> bool {
        let r = self.keys.row(v);
        self.space.contains(&r)
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// Exact rank of a family of linear combinations.
pub fn rank<K: Ord + Clone>(vs: &[LinComb<K>]) -> usize {
    let mut keys = KeyIndex::new();
    let rows: Vec<_> = vs.iter().map(|v| keys.row(v)).collect();
    rank_rows(rows)
}

type PivotRows = BTreeMap<usize, (BTreeMap<usize, Rational>, BTreeMap<usize, Rational>)>;

/// Expresses `target` as a combination of `basis`, or `None` when it is not in the span.
///
/// When the basis is dependent the returned coefficients are one valid choice
/// (free coefficients set to zero).
pub fn solve_in_span<K: Ord + Clone>(target: &LinComb<K>, basis: &[LinComb<K>]) -> Option<Vec<Rational>> {
    let mut keys = KeyIndex::new();
    // Each pivot row carries the combination of basis vectors producing it.
    let mut pivots: PivotRows = BTreeMap::new();
    let reduce = |pivots: &PivotRows, mut v: BTreeMap<usize, Rational>, mut comb: BTreeMap<usize, Rational>| {
        let mut cursor = 0;
        loop {
            let next = v.range(cursor..).find(|(c, _)| pivots.contains_key(c)).map(|(c, x)| (*c, x.clone()));
            let Some((col, x)) = next else { break };
            let (prow, pcomb) = &pivots[&col];
            for (c, y) in prow {
                let e = v.entry(*c).or_insert_with(Rational::zero);
                *e -= &x * y;
                if e.is_zero() {
                    v.remove(c);
                }
            }
            for (c, y) in pcomb {
                let e = comb.entry(*c).or_insert_with(Rational::zero);
                *e -= &x * y;
                if e.is_zero() {
                    comb.remove(c);
                }
            }
            cursor = col + 1;
        }
        (v, comb)
    };
    for (i, b) in basis.iter().enumerate() {
        let v: BTreeMap<usize, Rational> = keys.row(b).into_iter().collect();
        let comb = BTreeMap::from([(i, Rational::one())]);
        let (v, comb) = reduce(&pivots, v, comb);
        if let Some((&lead, lc)) = v.iter().next() {
            let inv = Rational::one() / lc;
            let v = v.iter().map(|(c, x)| (*c, x * &inv)).collect();
            let comb = comb.iter().map(|(c, x)| (*c, x * &inv)).collect();
            pivots.insert(lead, (v, comb));
        }
    }
    let t: BTreeMap<usize, Rational> = keys.row(target).into_iter().collect();
    let (rest, comb) = reduce(&pivots, t, BTreeMap::new());
    if !rest.is_empty() {
        return None;
    }
    let mut out = vec![Rational::zero(); basis.len()];
    for (i, x) in comb {
        out[i] = -x;
    }
    Some(out)
}
