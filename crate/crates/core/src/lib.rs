//! Constructions and exact checks for topological drawings of complete
//! graphs: crossing profiles, cell arrangements, type classifiers, plane
//! structure embeddings, disjoint-edge extraction and degeneracy cleanup.

pub mod arrangement;
pub mod classify;
pub mod error;
pub mod generators;
pub mod geometry;
pub mod sanitizer;
pub mod structures;

pub use error::{Error, Result};
pub use geometry::{
    crossing_matrix, pair_profile, Coord, CrossingMatrix, Drawing, EdgeKey, Mode, PairProfile, Point, PolylineEdge,
};
