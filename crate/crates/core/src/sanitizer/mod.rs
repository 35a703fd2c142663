//! Cleanup of degenerate stroke families into drawings that satisfy the
//! mild assumptions, without creating new disjoint pairs.
//!
//! A stroke family is a drawing read in lenient mode: strokes may touch,
//! share pieces, cross themselves and run through vertices. Every repair is a
//! local redraw inside a small square, so pairs that met before still meet.

mod family;
mod report;
mod stages;
mod surgery;

use serde::Serialize;

use crate::geometry::Drawing;

pub use report::{
    check_stroke_conditions, degeneracy_report, CoincidentRun, ConditionWitness, DegeneracyReport, SelfCrossing,
    StrokeConditions, StrokePair, Touching, VertexPass, WitnessReason,
};
pub use stages::{
    greedy_vertices, resolve_self_crossings, resolve_touchings, resolve_vertex_passes, sanitize, unpack_coincident,
    Certificate, Sanitized,
};

/// A drawing whose strokes may be degenerate.
pub type StrokeFamily = Drawing;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SanitizeMode {
    /// Keep every vertex; the result is adjacent-simple.
    A,
    /// Keep a subset of vertices; the result is separate-simple.
    S,
}

impl SanitizeMode {
    pub fn letter(self) -> char {
        match self {
            SanitizeMode::A => 'A',
            SanitizeMode::S => 'S',
        }
    }
}
