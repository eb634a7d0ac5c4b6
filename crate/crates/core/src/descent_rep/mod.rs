//! Cartan invariants, quivers and radical layers of the descent algebras and
//! of the derangement algebras `D^(k)`.

pub mod cartan;
pub mod lie_dims;
pub mod quiver;
pub mod radical;

pub use cartan::{
    cartan_d0, cartan_d0_lie, cartan_dk, cartan_dk_from_sym, cartan_dk_lie, cartan_span, cartan_sym, cartan_sym_lie,
    dk_labels, q_dimension_polynomials, triangle_rows, CartanMatrix,
};
pub use lie_dims::{lie_cartan_coefficient, multigraded_lie_dim};
pub use quiver::{quiver, quiver_by_merging, quiver_from_cartan, Algebra, Quiver};
pub use radical::{radical_filtration_oracle, radical_layer, LowerCentralSeries};
