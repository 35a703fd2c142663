//! Simplicity, disjointness and type classification of drawings.

mod disjoint;
mod layout;
mod simplicity;
mod source;
mod types;

pub use disjoint::{disjointness_graph, max_disjoint_set, DisjointnessGraph, DEFAULT_BUDGET};
pub use layout::{layout_check, layout_recognize, LayoutKind, DEFAULT_LAYOUT_BOUND};
pub use simplicity::{adjacent, simplicity, simplicity_of, SimplicityReport, SimplicityViolation, Witness};
pub use source::DisjointnessSource;
pub use types::{find_disjoint_pair_k4, matchings, verify_flower, verify_type, FlowerReport, TypeReport};
