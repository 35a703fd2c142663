use std::cmp::Ordering;

use num_traits::{One, Zero};
use serde::Serialize;

use super::point::{orient, Coord, Point};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EventKind {
    ProperCrossing,
    Touching,
    Overlap,
    SharedEndpoint,
    VertexOnInterior,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Location {
    Point(Point),
    Segment(Point, Point),
}

/// Position on a chain: segment index plus the fraction along that segment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainPos {
    pub segment: usize,
    pub t: Coord,
}

impl ChainPos {
    pub fn new(segment: usize, t: Coord) -> Self {
        ChainPos { segment, t }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionEvent {
    pub kind: EventKind,
    pub location: Location,
    /// Where the event sits on the first and second segment (or chain). For
    /// overlaps these mark the start of the shared piece.
    pub first: ChainPos,
    pub second: ChainPos,
}

impl IntersectionEvent {
    pub fn point(&self) -> Option<&Point> {
        match &self.location {
            Location::Point(p) => Some(p),
            Location::Segment(..) => None,
        }
    }
}

/// Fraction of `p` along `a -> b`, assuming `p` lies on the line through them.
pub(crate) fn param_on(a: &Point, b: &Point, p: &Point) -> Coord {
    if a.x != b.x {
        (&p.x - &a.x) / (&b.x - &a.x)
    } else {
        (&p.y - &a.y) / (&b.y - &a.y)
    }
}

/// Exact intersection point of two non-parallel lines `p0p1` and `q0q1`,
/// returned as the fraction along `p0p1`.
fn line_param(p0: &Point, p1: &Point, q0: &Point, q1: &Point) -> Coord {
    let (rx, ry) = p1.sub(p0);
    let (sx, sy) = q1.sub(q0);
    let (wx, wy) = q0.sub(p0);
    let den = &rx * &sy - &ry * &sx;
    (wx * sy - wy * sx) / den
}

pub(crate) fn boxes_meet(p0: &Point, p1: &Point, q0: &Point, q1: &Point) -> bool {
    let (pxl, pxh) = if p0.x <= p1.x { (&p0.x, &p1.x) } else { (&p1.x, &p0.x) };
    let (qxl, qxh) = if q0.x <= q1.x { (&q0.x, &q1.x) } else { (&q1.x, &q0.x) };
    if pxh < qxl || qxh < pxl {
        return false;
    }
    let (pyl, pyh) = if p0.y <= p1.y { (&p0.y, &p1.y) } else { (&p1.y, &p0.y) };
    let (qyl, qyh) = if q0.y <= q1.y { (&q0.y, &q1.y) } else { (&q1.y, &q0.y) };
    !(pyh < qyl || qyh < pyl)
}

/// Classifies how segment `p0p1` meets segment `q0q1`.
///
/// Collinear segments sharing more than a point overlap; a single common
/// point that is an endpoint of both is a shared endpoint; an endpoint of one
/// resting on the interior of the other is a touching. Everything else that
/// meets is a proper crossing.
pub fn intersect_segments(p0: &Point, p1: &Point, q0: &Point, q1: &Point) -> Option<IntersectionEvent> {
    debug_assert!(p0 != p1 && q0 != q1, "degenerate segment");
    if !boxes_meet(p0, p1, q0, q1) {
        return None;
    }
    let o1 = orient(p0, p1, q0);
    let o2 = orient(p0, p1, q1);
    if o1 == Ordering::Equal && o2 == Ordering::Equal {
        return collinear(p0, p1, q0, q1);
    }
    if o1 == o2 {
        return None;
    }
    let o3 = orient(q0, q1, p0);
    let o4 = orient(q0, q1, p1);
    if o3 == o4 {
        return None;
    }
    if o1 != Ordering::Equal && o2 != Ordering::Equal && o3 != Ordering::Equal && o4 != Ordering::Equal {
        let t = line_param(p0, p1, q0, q1);
        let at = p0.lerp(p1, &t);
        let u = param_on(q0, q1, &at);
        return Some(IntersectionEvent {
            kind: EventKind::ProperCrossing,
            location: Location::Point(at),
            first: ChainPos::new(0, t),
            second: ChainPos::new(0, u),
        });
    }
    // Exactly one orientation vanishes on each side at most: the meeting
    // point is an endpoint of at least one segment.
    let at = if o1 == Ordering::Equal {
        q0.clone()
    } else if o2 == Ordering::Equal {
        q1.clone()
    } else if o3 == Ordering::Equal {
        p0.clone()
    } else {
        p1.clone()
    };
    let on_p_end = at == *p0 || at == *p1;
    let on_q_end = at == *q0 || at == *q1;
    let kind = if on_p_end && on_q_end { EventKind::SharedEndpoint } else { EventKind::Touching };
    let t = param_on(p0, p1, &at);
    let u = param_on(q0, q1, &at);
    Some(IntersectionEvent {
        kind,
        location: Location::Point(at),
        first: ChainPos::new(0, t),
        second: ChainPos::new(0, u),
    })
}

fn collinear(p0: &Point, p1: &Point, q0: &Point, q1: &Point) -> Option<IntersectionEvent> {
    // Parametrize both along p0p1; q's range is [min, max] of its endpoints.
    let a = param_on(p0, p1, q0);
    let b = param_on(p0, p1, q1);
    let (lo_q, hi_q) = if a <= b { (a, b) } else { (b, a) };
    let zero = Coord::zero();
    let one = Coord::one();
    let lo = if lo_q > zero { lo_q } else { zero };
    let hi = if hi_q < one { hi_q } else { one };
    match lo.cmp(&hi) {
        Ordering::Greater => None,
        Ordering::Equal => {
            let at = p0.lerp(p1, &lo);
            let u = param_on(q0, q1, &at);
            Some(IntersectionEvent {
                kind: EventKind::SharedEndpoint,
                location: Location::Point(at),
                first: ChainPos::new(0, lo),
                second: ChainPos::new(0, u),
            })
        }
        Ordering::Less => {
            let s = p0.lerp(p1, &lo);
            let e = p0.lerp(p1, &hi);
            let u = param_on(q0, q1, &s);
            Some(IntersectionEvent {
                kind: EventKind::Overlap,
                location: Location::Segment(s, e),
                first: ChainPos::new(0, lo),
                second: ChainPos::new(0, u),
            })
        }
    }
}
