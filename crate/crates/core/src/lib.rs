//! Exact computations in the descent algebras, free quasi-symmetric functions
//! and the Solomon-Tits algebras, centred on the `(1-E)` transform.

pub mod combinatorics;
pub mod csym;
pub mod descent_rep;
pub mod error;
pub mod exact;
pub mod fqsym;
pub mod nsym;
pub mod wqsym;

pub use error::{Error, Result};
