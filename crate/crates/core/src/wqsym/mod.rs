//! `W = WQSym^*`, the Solomon-Tits algebras, and their `♯` images.

pub mod cartan;
pub mod dense;
pub mod element;
pub mod filtration;
pub mod radical;
pub mod saliola;
pub mod sharp;

pub use cartan::{cartan_invariant, cartan_wqsym, quiver_arrows, sandwich_dimensions, WCartan};
pub use element::{embed, WqsymElement};
pub use filtration::{v_filtration, VFiltration};
pub use radical::{is_two_sided_ideal, radical_and_quotient, RadicalReport};
pub use saliola::{saliola_idempotents, zassenhaus_coefficients, SaliolaMode};
pub use sharp::{d_n, non_unitary_words, sharp, sharp_basis, sharp_ranks, sigma1_sharp, SharpRanks};
