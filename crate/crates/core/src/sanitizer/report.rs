//! Degeneracy inventory and the two stroke conditions.

use std::collections::BTreeSet;

use serde::Serialize;

use super::family::Family;
use crate::geometry::profile::{classify_local, rays, Incidence};
use crate::geometry::segment::param_on;
use crate::geometry::{
    chain_contacts, intersect_segments, on_segment, orient, ChainPos, Drawing, EdgeKey, EventKind, Location, Point,
};

/// Which strokes a touching involves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StrokePair {
    Pair(EdgeKey, EdgeKey),
    Own(EdgeKey),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Touching {
    pub strokes: StrokePair,
    pub at: Point,
}

/// A maximal piece covered by several stroke pieces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoincidentRun {
    pub from: Point,
    pub to: Point,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelfCrossing {
    pub stroke: EdgeKey,
    pub at: Point,
}

/// A stroke passing through a vertex other than at its own two ends.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexPass {
    pub stroke: EdgeKey,
    pub vertex: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DegeneracyReport {
    pub touchings: Vec<Touching>,
    pub coincident_runs: Vec<CoincidentRun>,
    pub self_crossings: Vec<SelfCrossing>,
    pub vertex_passes: Vec<VertexPass>,
}

impl DegeneracyReport {
    pub fn is_clean(&self) -> bool {
        self.touchings.is_empty()
            && self.coincident_runs.is_empty()
            && self.self_crossings.is_empty()
            && self.vertex_passes.is_empty()
    }
}

/// How a chain meets itself away from consecutive joints.
#[derive(Default)]
pub(crate) struct SelfContacts {
    pub points: Vec<(Point, EventKind)>,
    pub overlaps: Vec<(Point, Point)>,
}

pub(crate) fn self_contacts(chain: &[Point]) -> SelfContacts {
    let mut out = SelfContacts::default();
    let mut seen: BTreeSet<(Incidence, Incidence)> = BTreeSet::new();
    let m = chain.len().saturating_sub(1);
    for i in 0..m {
        for j in i + 1..m {
            let Some(ev) = intersect_segments(&chain[i], &chain[i + 1], &chain[j], &chain[j + 1]) else {
                continue;
            };
            let at = match ev.location {
                Location::Segment(a, b) => {
                    out.overlaps.push((a, b));
                    continue;
                }
                Location::Point(at) => at,
            };
            let ia = Incidence::from_pos(&ChainPos::new(i, ev.first.t.clone()));
            let ib = Incidence::from_pos(&ChainPos::new(j, ev.second.t.clone()));
            if ia == ib || !seen.insert((ia.clone(), ib.clone())) {
                continue;
            }
            let kind = classify_local(&rays(chain, &ia, &at), &rays(chain, &ib, &at));
            if let Some(kind) = kind {
                out.points.push((at, kind));
            }
        }
    }
    out
}

fn point_cmp(a: &Point, b: &Point) -> std::cmp::Ordering {
    a.cmp(b)
}

/// Pieces between consecutive overlap ends, with how many stroke pieces
/// cover each, merged along straight runs of equal multiplicity.
fn coincident_runs(f: &Family, overlaps: &[(Point, Point)]) -> Vec<CoincidentRun> {
    let mut ends: Vec<Point> = overlaps.iter().flat_map(|(a, b)| [a.clone(), b.clone()]).collect();
    ends.sort_by(point_cmp);
    ends.dedup();
    let mut pieces: Vec<(Point, Point)> = Vec::new();
    for (a, b) in overlaps {
        let mut on: Vec<&Point> = ends.iter().filter(|p| on_segment(a, b, p)).collect();
        on.sort_by_key(|p| param_on(a, b, p));
        for w in on.windows(2) {
            let (p, q) = if w[0] < w[1] { (w[0], w[1]) } else { (w[1], w[0]) };
            let piece = (p.clone(), q.clone());
            if !pieces.contains(&piece) {
                pieces.push(piece);
            }
        }
    }
    let mut runs: Vec<CoincidentRun> = pieces
        .into_iter()
        .map(|(p, q)| {
            let multiplicity = f
                .chains
                .iter()
                .flat_map(|c| c.windows(2))
                .filter(|w| on_segment(&w[0], &w[1], &p) && on_segment(&w[0], &w[1], &q))
                .count();
            CoincidentRun { from: p, to: q, multiplicity }
        })
        .filter(|r| r.multiplicity >= 2)
        .collect();
    'merge: loop {
        for i in 0..runs.len() {
            for j in 0..runs.len() {
                let (a, b) = (&runs[i], &runs[j]);
                if i == j || a.multiplicity != b.multiplicity || a.to != b.from {
                    continue;
                }
                if orient(&a.from, &a.to, &b.to).is_eq() {
                    let to = b.to.clone();
                    runs[i].to = to;
                    runs.remove(j);
                    continue 'merge;
                }
            }
        }
        break;
    }
    runs.sort_by(|a, b| point_cmp(&a.from, &b.from).then_with(|| point_cmp(&a.to, &b.to)));
    runs
}

pub(crate) fn family_report(f: &Family) -> DegeneracyReport {
    let mut rep = DegeneracyReport::default();
    let mut overlaps: Vec<(Point, Point)> = Vec::new();
    for (s, chain) in f.chains.iter().enumerate() {
        let own = self_contacts(chain);
        for (at, kind) in own.points {
            match kind {
                EventKind::Touching => rep.touchings.push(Touching { strokes: StrokePair::Own(f.keys[s]), at }),
                EventKind::ProperCrossing => rep.self_crossings.push(SelfCrossing { stroke: f.keys[s], at }),
                _ => {}
            }
        }
        overlaps.extend(own.overlaps);
        for t in s + 1..f.chains.len() {
            let c = chain_contacts(chain, &f.chains[t]);
            for p in c.points {
                if p.kind == EventKind::Touching {
                    rep.touchings.push(Touching { strokes: StrokePair::Pair(f.keys[s], f.keys[t]), at: p.at });
                }
            }
            for ov in c.overlaps {
                if let Location::Segment(a, b) = ov.location {
                    overlaps.push((a, b));
                }
            }
        }
        for (w, v) in f.vertices.iter().enumerate() {
            if passes_through(chain, v) {
                rep.vertex_passes.push(VertexPass { stroke: f.keys[s], vertex: w });
            }
        }
    }
    rep.coincident_runs = coincident_runs(f, &overlaps);
    rep
}

/// Does the chain meet `v` anywhere but at its first and last point?
pub(crate) fn passes_through(chain: &[Point], v: &Point) -> bool {
    let m = chain.len() - 1;
    chain[1..m].contains(v) || chain.windows(2).any(|w| &w[0] != v && &w[1] != v && on_segment(&w[0], &w[1], v))
}

pub fn degeneracy_report(d: &Drawing) -> DegeneracyReport {
    family_report(&Family::from_drawing(d))
}

/// Why a stroke pair breaks a condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessReason {
    /// The strokes share a whole piece, so the pre-images are infinite.
    Overlap,
    /// Number of points of each stroke that lie on the other.
    Count(usize, usize),
    Touching(Point),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionWitness {
    pub condition: char,
    pub strokes: (EdgeKey, EdgeKey),
    pub reason: WitnessReason,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrokeConditions {
    #[serde(rename = "A")]
    pub a: bool,
    #[serde(rename = "S")]
    pub s: bool,
    pub witnesses: Vec<ConditionWitness>,
}

/// Condition A: every two strokes sharing an endpoint meet in exactly one
/// point of each. Condition S: every two strokes without a common endpoint
/// meet in at most one point of each, and not in a touching.
pub fn check_stroke_conditions(d: &Drawing) -> StrokeConditions {
    let mut witnesses = Vec::new();
    for (i, e) in d.edges.iter().enumerate() {
        for f in &d.edges[i + 1..] {
            let adjacent = e.is_adjacent(f);
            let c = chain_contacts(&e.chain, &f.chain);
            let count = |first: bool| -> usize {
                let set: BTreeSet<Incidence> =
                    c.points.iter().map(|p| Incidence::from_pos(if first { &p.first } else { &p.second })).collect();
                set.len()
            };
            let condition = if adjacent { 'A' } else { 'S' };
            let strokes = (e.key(), f.key());
            if !c.overlaps.is_empty() {
                witnesses.push(ConditionWitness { condition, strokes, reason: WitnessReason::Overlap });
                continue;
            }
            let (a, b) = (count(true), count(false));
            let bad = if adjacent { a != 1 || b != 1 } else { a > 1 || b > 1 };
            if bad {
                witnesses.push(ConditionWitness { condition, strokes, reason: WitnessReason::Count(a, b) });
            } else if !adjacent {
                if let Some(t) = c.points.iter().find(|p| p.kind == EventKind::Touching) {
                    witnesses.push(ConditionWitness {
                        condition,
                        strokes,
                        reason: WitnessReason::Touching(t.at.clone()),
                    });
                }
            }
        }
    }
    StrokeConditions {
        a: witnesses.iter().all(|w| w.condition != 'A'),
        s: witnesses.iter().all(|w| w.condition != 'S'),
        witnesses,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_convex, gen_degenerate_fixture, FixtureKind, FixtureParams};

    fn fixture(kind: FixtureKind, size: usize, adjacent: bool) -> Drawing {
        gen_degenerate_fixture(kind, FixtureParams { size, adjacent }).unwrap()
    }

    #[test]
    fn clean_drawing_meets_both_conditions() {
        let c = check_stroke_conditions(&gen_convex(6));
        assert!(c.a && c.s && c.witnesses.is_empty());
        assert!(degeneracy_report(&gen_convex(6)).is_clean());
    }

    #[test]
    fn star_center_fails_condition_a() {
        // Adjacent edges meet at their common vertex and again at the center.
        let c = check_stroke_conditions(&fixture(FixtureKind::StarCenter, 4, false));
        assert!(!c.a);
        assert!(c.witnesses.iter().any(|w| w.condition == 'A' && w.reason == WitnessReason::Count(2, 2)));
        assert!(!c.s);
        let c = check_stroke_conditions(&fixture(FixtureKind::StarCenter, 3, false));
        assert!(!c.a && c.s);
    }

    #[test]
    fn separate_touching_pair_fails_condition_s() {
        let c = check_stroke_conditions(&fixture(FixtureKind::TouchingPair, 0, false));
        assert!(c.a && !c.s);
        assert!(matches!(c.witnesses[0].reason, WitnessReason::Touching(_)));
        let c = check_stroke_conditions(&fixture(FixtureKind::TouchingPair, 0, true));
        assert!(!c.a && c.s);
    }

    #[test]
    fn bundles_split_by_adjacency() {
        let c = check_stroke_conditions(&fixture(FixtureKind::CoincidentBundle, 3, false));
        assert!(c.a && !c.s);
        let c = check_stroke_conditions(&fixture(FixtureKind::CoincidentBundle, 3, true));
        assert!(!c.a && c.s);
    }

    #[test]
    fn bundle_of_three_is_one_run() {
        let r = degeneracy_report(&fixture(FixtureKind::CoincidentBundle, 3, false));
        assert_eq!(
            r.coincident_runs,
            vec![CoincidentRun { from: Point::int(20, 10), to: Point::int(40, 10), multiplicity: 3 }]
        );
        assert!(r.touchings.is_empty() && r.self_crossings.is_empty());
    }

    #[test]
    fn self_crossing_and_passes_are_listed() {
        let r = degeneracy_report(&fixture(FixtureKind::SelfCrossing, 0, false));
        assert_eq!(r.self_crossings.len(), 1);
        assert_eq!(r.self_crossings[0].stroke, (0, 1));
        let d = Drawing::straight(vec![Point::int(0, 0), Point::int(2, 0), Point::int(1, 0)], &[(0, 1)]).unwrap();
        let r = degeneracy_report(&d);
        assert_eq!(r.vertex_passes, vec![VertexPass { stroke: (0, 1), vertex: 2 }]);
    }

    #[test]
    fn touchings_name_their_strokes() {
        let r = degeneracy_report(&fixture(FixtureKind::TouchingPair, 0, false));
        assert_eq!(r.touchings, vec![Touching { strokes: StrokePair::Pair((0, 1), (2, 3)), at: Point::int(5, 0) }]);
    }
}
