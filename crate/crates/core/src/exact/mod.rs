//! Exact scalars, polynomials in `q`, sparse vectors and elimination.

pub mod linalg;
pub mod lincomb;
pub mod modp;
pub mod qpoly;
pub mod rational;

pub use linalg::{rank, rank_rows, solve_in_span, KeyIndex, RowSpace, Span, SparseMatrix};
pub use lincomb::LinComb;
pub use qpoly::{qbinomial, qfactorial, qint, QPoly};
pub use rational::{frac, int, Rational};
