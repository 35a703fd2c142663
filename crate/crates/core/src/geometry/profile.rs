use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

use super::drawing::{Drawing, EdgeKey};
use super::mild::mild_report;
use super::point::{angle_cmp, cross_sign, Coord, Point};
use super::segment::{intersect_segments, ChainPos, EventKind, IntersectionEvent, Location};

/// Per-pair intersection summary.
///
/// `vertex_contacts` counts places where the end of one chain rests on the
/// interior of the other. Such contacts only occur in lenient input.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct PairProfile {
    pub crossing_count: usize,
    pub touching_count: usize,
    pub vertex_contacts: usize,
    pub has_overlap: bool,
    pub shares_endpoint: bool,
    pub disjoint: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Reject drawings that break the mild assumptions.
    Strict,
    /// Accept anything; degeneracies show up in the profiles.
    Lenient,
}

/// Where a chain passes through a point: at one of its own points (a joint,
/// or an end when the index is first or last) or inside a segment.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) enum Incidence {
    Joint(usize),
    Interior(usize, Coord),
}

impl Incidence {
    pub(crate) fn from_pos(pos: &ChainPos) -> Self {
        if pos.t.is_zero() {
            Incidence::Joint(pos.segment)
        } else if pos.t.is_one() {
            Incidence::Joint(pos.segment + 1)
        } else {
            Incidence::Interior(pos.segment, pos.t.clone())
        }
    }

    pub(crate) fn pos(&self) -> ChainPos {
        match self {
            Incidence::Joint(k) => ChainPos::new(*k, Coord::zero()),
            Incidence::Interior(s, t) => ChainPos::new(*s, t.clone()),
        }
    }
}

pub(crate) type Dir = (Coord, Coord);

/// Directions in which the chain leaves the point `at` located by `inc`.
pub(crate) fn rays(chain: &[Point], inc: &Incidence, at: &Point) -> Vec<Dir> {
    match inc {
        Incidence::Joint(k) => {
            let mut out = Vec::with_capacity(2);
            if *k > 0 {
                out.push(chain[k - 1].sub(at));
            }
            if k + 1 < chain.len() {
                out.push(chain[k + 1].sub(at));
            }
            out
        }
        Incidence::Interior(s, _) => vec![chain[*s].sub(at), chain[s + 1].sub(at)],
    }
}

fn same_dir(a: &Dir, b: &Dir) -> bool {
    angle_cmp(a, b) == Ordering::Equal
}

/// Is `d` strictly inside the counterclockwise sweep from `from` to `to`?
pub(crate) fn in_ccw_sweep(from: &Dir, to: &Dir, d: &Dir) -> bool {
    // 0 when the angle from `from` to `x` is in [0, pi), else 1.
    let half = |x: &Dir| -> u8 {
        let c = cross_sign(from, x);
        let ahead =
            c == Ordering::Greater || (c == Ordering::Equal && (&from.0 * &x.0 + &from.1 * &x.1) > Coord::zero());
        u8::from(!ahead)
    };
    let (hd, ht) = (half(d), half(to));
    if hd != ht {
        return hd < ht;
    }
    cross_sign(d, to) == Ordering::Greater
}

/// Local classification of two chains meeting at a point, given the
/// directions each leaves in. `None` means the chains run together there.
pub(crate) fn classify_local(rp: &[Dir], rq: &[Dir]) -> Option<EventKind> {
    match (rp.len(), rq.len()) {
        (1, 1) => Some(EventKind::SharedEndpoint),
        (1, _) | (_, 1) => Some(EventKind::VertexOnInterior),
        _ => {
            if rp.iter().any(|a| rq.iter().any(|b| same_dir(a, b))) {
                return None;
            }
            let a = in_ccw_sweep(&rp[0], &rp[1], &rq[0]);
            let b = in_ccw_sweep(&rp[0], &rp[1], &rq[1]);
            Some(if a != b { EventKind::ProperCrossing } else { EventKind::Touching })
        }
    }
}

/// Conservative floating-point box of one segment, used only to skip pairs.
#[derive(Clone, Copy)]
struct FBox {
    lo: (f64, f64),
    hi: (f64, f64),
}

impl FBox {
    fn of(a: &Point, b: &Point) -> FBox {
        let f = |c: &Coord| c.to_f64().unwrap_or(0.0);
        let (ax, ay, bx, by) = (f(&a.x), f(&a.y), f(&b.x), f(&b.y));
        let pad = |v: f64| v.abs() * 1e-9 + 1e-300;
        let lo = (ax.min(bx), ay.min(by));
        let hi = (ax.max(bx), ay.max(by));
        FBox { lo: (lo.0 - pad(lo.0), lo.1 - pad(lo.1)), hi: (hi.0 + pad(hi.0), hi.1 + pad(hi.1)) }
    }

    fn union(&self, o: &FBox) -> FBox {
        FBox { lo: (self.lo.0.min(o.lo.0), self.lo.1.min(o.lo.1)), hi: (self.hi.0.max(o.hi.0), self.hi.1.max(o.hi.1)) }
    }

    fn meets(&self, o: &FBox) -> bool {
        self.lo.0 <= o.hi.0 && o.lo.0 <= self.hi.0 && self.lo.1 <= o.hi.1 && o.lo.1 <= self.hi.1
    }
}

/// A chain with cached segment boxes.
pub(crate) struct Prepared<'a> {
    pub pts: &'a [Point],
    boxes: Vec<FBox>,
    whole: FBox,
    /// Small-integer copy of `pts` when every coordinate allows it.
    ints: Option<Vec<(i64, i64)>>,
}

const SMALL: i64 = 1 << 60;

impl<'a> Prepared<'a> {
    pub(crate) fn new(pts: &'a [Point]) -> Self {
        let boxes: Vec<FBox> = pts.windows(2).map(|w| FBox::of(&w[0], &w[1])).collect();
        let whole = boxes.iter().skip(1).fold(boxes[0], |acc, b| acc.union(b));
        let ints = pts.iter().map(|p| p.as_i64().filter(|&(x, y)| x.abs() < SMALL && y.abs() < SMALL)).collect();
        Prepared { pts, boxes, whole, ints }
    }
}

fn orient_i(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> i128 {
    let d = (b.0 as i128 - a.0 as i128) * (c.1 as i128 - a.1 as i128)
        - (b.1 as i128 - a.1 as i128) * (c.0 as i128 - a.0 as i128);
    d.signum()
}

/// Integer segments that one of them strictly separates from the other.
fn strictly_apart(a: (i64, i64), b: (i64, i64), c: (i64, i64), d: (i64, i64)) -> bool {
    orient_i(a, b, c) * orient_i(a, b, d) > 0 || orient_i(c, d, a) * orient_i(c, d, b) > 0
}

/// One place where two chains meet at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contact {
    pub at: Point,
    pub kind: EventKind,
    pub first: ChainPos,
    pub second: ChainPos,
}

/// Everything two chains share: isolated contacts plus overlapping pieces.
#[derive(Clone, Debug, Default)]
pub struct Contacts {
    pub points: Vec<Contact>,
    pub overlaps: Vec<IntersectionEvent>,
}

impl Contacts {
    pub fn profile(&self) -> PairProfile {
        let mut p = PairProfile { has_overlap: !self.overlaps.is_empty(), ..PairProfile::default() };
        for c in &self.points {
            match c.kind {
                EventKind::ProperCrossing => p.crossing_count += 1,
                EventKind::Touching => p.touching_count += 1,
                EventKind::SharedEndpoint => p.shares_endpoint = true,
                EventKind::VertexOnInterior => p.vertex_contacts += 1,
                EventKind::Overlap => p.has_overlap = true,
            }
        }
        p.disjoint = p.crossing_count == 0
            && p.touching_count == 0
            && p.vertex_contacts == 0
            && !p.has_overlap
            && !p.shares_endpoint;
        p
    }
}

pub(crate) fn contacts_prepared(p: &Prepared, q: &Prepared) -> Contacts {
    let mut out = Contacts::default();
    if !p.whole.meets(&q.whole) {
        return out;
    }
    let mut seen: BTreeSet<(Incidence, Incidence)> = BTreeSet::new();
    for (i, bp) in p.boxes.iter().enumerate() {
        if !bp.meets(&q.whole) {
            continue;
        }
        for (j, bq) in q.boxes.iter().enumerate() {
            if !bp.meets(bq) {
                continue;
            }
            if let (Some(pi), Some(qi)) = (&p.ints, &q.ints) {
                if strictly_apart(pi[i], pi[i + 1], qi[j], qi[j + 1]) {
                    continue;
                }
            }
            let Some(mut ev) = intersect_segments(&p.pts[i], &p.pts[i + 1], &q.pts[j], &q.pts[j + 1]) else {
                continue;
            };
            ev.first.segment = i;
            ev.second.segment = j;
            let at = match &ev.location {
                Location::Segment(..) => {
                    out.overlaps.push(ev);
                    continue;
                }
                Location::Point(at) => at.clone(),
            };
            let ip = Incidence::from_pos(&ev.first);
            let iq = Incidence::from_pos(&ev.second);
            if !seen.insert((ip.clone(), iq.clone())) {
                continue;
            }
            let kind = match (&ip, &iq) {
                // Interior to both segments: the segment test already decided.
                (Incidence::Interior(..), Incidence::Interior(..)) => Some(ev.kind),
                _ => classify_local(&rays(p.pts, &ip, &at), &rays(q.pts, &iq, &at)),
            };
            if let Some(kind) = kind {
                out.points.push(Contact { at, kind, first: ip.pos(), second: iq.pos() });
            }
        }
    }
    out
}

/// All contacts between two chains, each counted once.
pub fn chain_contacts(p: &[Point], q: &[Point]) -> Contacts {
    contacts_prepared(&Prepared::new(p), &Prepared::new(q))
}

fn check_chain(d: &Drawing, e: usize) -> Result<()> {
    let edge = &d.edges[e];
    match edge.repeated_point() {
        Some(at) => Err(Error::DegenerateChain { edge: edge.key(), at: Box::new(at.clone()) }),
        None => Ok(()),
    }
}

/// Intersection profile of edges `e` and `f` (ids into `d.edges`).
pub fn pair_profile(d: &Drawing, e: usize, f: usize) -> Result<PairProfile> {
    if e == f {
        return Err(Error::PreconditionViolated("pair_profile needs two distinct edges".into()));
    }
    check_chain(d, e)?;
    check_chain(d, f)?;
    Ok(chain_contacts(&d.edges[e].chain, &d.edges[f].chain).profile())
}

/// Profiles of every unordered edge pair, keyed by edge ids `(i, j)`, `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingMatrix {
    pub keys: Vec<EdgeKey>,
    pub profiles: BTreeMap<(usize, usize), PairProfile>,
}

impl CrossingMatrix {
    pub fn get(&self, e: usize, f: usize) -> &PairProfile {
        let k = if e < f { (e, f) } else { (f, e) };
        &self.profiles[&k]
    }

    /// Lookup by vertex pairs.
    pub fn between(&self, a: EdgeKey, b: EdgeKey) -> Option<&PairProfile> {
        let i = self.keys.binary_search(&a).ok()?;
        let j = self.keys.binary_search(&b).ok()?;
        (i != j).then(|| self.get(i, j))
    }

    pub fn iter(&self) -> impl Iterator<Item = (EdgeKey, EdgeKey, &PairProfile)> {
        self.profiles.iter().map(move |(&(i, j), p)| (self.keys[i], self.keys[j], p))
    }

    /// Crossing counts only, for comparing two matrices.
    pub fn counts(&self) -> Vec<usize> {
        self.profiles.values().map(|p| p.crossing_count).collect()
    }
}

pub fn crossing_matrix(d: &Drawing, mode: Mode) -> Result<CrossingMatrix> {
    for e in 0..d.edges.len() {
        check_chain(d, e)?;
    }
    let contacts = all_contacts(d);
    if mode == Mode::Strict {
        let report = mild_report(d, &contacts);
        if !report.passes() {
            return Err(Error::MildAssumptions(report));
        }
    }
    Ok(CrossingMatrix {
        keys: d.edges.iter().map(|e| e.key()).collect(),
        profiles: contacts.into_iter().map(|(k, c)| (k, c.profile())).collect(),
    })
}

/// Contacts of every edge pair `(i, j)`, `i < j`, in order.
pub(crate) fn all_contacts(d: &Drawing) -> Vec<((usize, usize), Contacts)> {
    let prepared: Vec<Prepared> = d.edges.iter().map(|e| Prepared::new(&e.chain)).collect();
    let m = d.edges.len();
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    pairs.par_iter().map(|&(i, j)| ((i, j), contacts_prepared(&prepared[i], &prepared[j]))).collect()
}
