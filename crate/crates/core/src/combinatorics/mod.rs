//! k-sets, uniform families, term orders, and the explicit extremal families.

mod families;
mod family;
pub mod format;
mod kset;
mod order;

pub use families::{
    b_family, balanced_parts, binomial, c_family, h_value, star, turan_edge_count, turan_graph,
};
pub use family::{Family, Permutation};
pub use kset::{KSet, PartialRelation, MAX_VERTICES};
pub use order::{TermOrder, DEFAULT_VALIDATION_BOUND};

pub(crate) use families::{h_closed_form, h_max_form, h_partition_form};
pub(crate) use kset::k_subsets;
