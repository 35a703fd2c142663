//! Exact geometric kernel: points with rational coordinates, polyline edges,
//! drawings, and intersection classification.

mod drawing;
pub mod json;
mod mild;
mod point;
pub(crate) mod profile;
pub(crate) mod segment;

pub use drawing::{key, Drawing, EdgeKey, PolylineEdge};
pub use mild::{check_mild_assumptions, on_segment, self_intersections, MildReport, MildViolation};
pub use point::{angle_cmp, cross_sign, dist2, frac, int, orient, Coord, Point};
pub use profile::{
    chain_contacts, crossing_matrix, pair_profile, Contact, Contacts, CrossingMatrix, Mode, PairProfile,
};
pub use segment::{intersect_segments, ChainPos, EventKind, IntersectionEvent, Location};
