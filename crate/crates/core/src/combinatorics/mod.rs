//! Combinatorial index objects and statistics.

pub mod composition;
pub mod foata;
pub mod packed;
pub mod partition;
pub mod permutation;
pub mod words;

pub use composition::Composition;
pub use foata::{
    consecutive_lr_min_stat, foata_phi, foata_phi_inv, m_count, maximal_elements_x, w_of, weak_order_leq,
    weak_order_leq_side, x_set, WeakSide,
};
pub use packed::{pack, pack_biword, PackedWord, SetPartition};
pub use partition::Partition;
pub use permutation::Permutation;
pub use words::{shuffle, shuffle_many};
