//! Free quasi-symmetric functions and the group algebras of the symmetric groups.

pub mod dense;
pub mod eigen;
pub mod element;
pub mod pbt;
pub mod sharp;
pub mod ssigma;
pub mod tsetlin;
pub mod xbasis;

pub use crate::csym::cycle_index;
pub use eigen::{is_eigenvector, lie_eigenbasis};
pub use element::{embed, project, FqsymBasis, FqsymElement};
pub use pbt::{in_pbt, pbt_sharp_dims, BinTree, PbtReport};
pub use sharp::{sharp, sharp_rank, sigma1_sharp, trace_dimension};
pub use ssigma::{s_sigma, s_sigma_sharp_matrix, selected_convention, to_s_sigma, SSigmaReport};
pub use tsetlin::{t_n, tsetlin_spectral, TsetlinSpectrum};
pub use xbasis::{x_basis, XBasisReport};
