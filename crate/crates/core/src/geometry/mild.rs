use std::cmp::Ordering;

use serde::Serialize;

use super::drawing::{Drawing, EdgeKey};
use super::point::{orient, Point};
use super::profile::{all_contacts, Contacts};
use super::segment::{boxes_meet, intersect_segments, EventKind, Location};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum MildViolation {
    VertexOnInterior { vertex: usize, edge: EdgeKey },
    SelfIntersection { edge: EdgeKey, at: Point },
    Touching { edges: (EdgeKey, EdgeKey), at: Point },
    Overlap { edges: (EdgeKey, EdgeKey), from: Point, to: Point },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MildReport {
    pub violations: Vec<MildViolation>,
}

impl MildReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

impl Serialize for Point {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeTuple;
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(&self.x.to_string())?;
        t.serialize_element(&self.y.to_string())?;
        t.end()
    }
}

/// Does `p` lie on the closed segment `a b`?
pub fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    boxes_meet(a, b, p, p) && orient(a, b, p) == Ordering::Equal
}

/// Points where a chain meets itself, in chain order.
pub fn self_intersections(chain: &[Point]) -> Vec<Point> {
    let mut out = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for p in chain {
        if !seen.insert(p) {
            out.push(p.clone());
        }
    }
    let m = chain.len().saturating_sub(1);
    for i in 0..m {
        for j in i + 1..m {
            let Some(ev) = intersect_segments(&chain[i], &chain[i + 1], &chain[j], &chain[j + 1]) else {
                continue;
            };
            let at = match &ev.location {
                Location::Point(p) => p.clone(),
                Location::Segment(s, _) => s.clone(),
            };
            // Consecutive segments always share their joint; that alone is fine.
            if j == i + 1 && ev.kind == EventKind::SharedEndpoint {
                continue;
            }
            out.push(at);
        }
    }
    out
}

pub fn check_mild_assumptions(d: &Drawing) -> MildReport {
    mild_report(d, &all_contacts(d))
}

pub(crate) fn mild_report(d: &Drawing, contacts: &[((usize, usize), Contacts)]) -> MildReport {
    let mut violations = Vec::new();
    for e in &d.edges {
        for at in self_intersections(&e.chain) {
            violations.push(MildViolation::SelfIntersection { edge: e.key(), at });
        }
        for (w, p) in d.vertices.iter().enumerate() {
            if w == e.u || w == e.v {
                continue;
            }
            if e.segments().any(|(a, b)| on_segment(a, b, p)) {
                violations.push(MildViolation::VertexOnInterior { vertex: w, edge: e.key() });
            }
        }
    }
    for ((i, j), c) in contacts {
        let edges = (d.edges[*i].key(), d.edges[*j].key());
        for ct in &c.points {
            if ct.kind == EventKind::Touching {
                violations.push(MildViolation::Touching { edges, at: ct.at.clone() });
            }
        }
        for ov in &c.overlaps {
            if let Location::Segment(from, to) = &ov.location {
                violations.push(MildViolation::Overlap { edges, from: from.clone(), to: to.clone() });
            }
        }
    }
    MildReport { violations }
}
