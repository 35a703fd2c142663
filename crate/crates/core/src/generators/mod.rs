//! Drawing families and combinatorial oracles.

mod adjacent;
mod fixture;
mod flower;
mod oracle;
mod simple;
mod type3;

pub use adjacent::gen_adjacent_crossing;
pub use fixture::{gen_degenerate_fixture, FixtureKind, FixtureParams};
pub(crate) use flower::flower_witness;
pub use flower::{gen_flower, gen_flower_with, FlowerParams};
pub use oracle::{oracle_type, DisjointnessOracle, OracleKind, TypeKind};
pub use simple::{gen_convex, gen_twisted};
pub use type3::{gen_type3_geometric, MAX_TYPE3};
