//! Noncommutative symmetric functions.

pub mod derangement;
pub mod element;
pub mod internal;
pub mod lie;
pub mod parse;
pub mod series;

pub use derangement::{d0_dim, d_nk, derangement_algebra_basis, dnk_dim, neutral_p, s1_divided, s_sharp_of, sharp};
pub use element::{is_primitive, Nsf, NsfBasis, NsfElement};
pub use lie::{hausdorff, hausdorff_decomposition, increasing, solomon, zassenhaus, zeta, zeta_e, LieFamily, LieKind};
pub use parse::parse_element;
pub use series::{
    desarrangement_ribbons, desarrangement_series, monomial_coeffs_of_e_transform, s_sharp, sigma_sharp, NsfSeries,
};
