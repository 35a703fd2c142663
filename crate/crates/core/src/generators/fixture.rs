//! Small degenerate stroke families for exercising the sanitizer.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::geometry::{frac, int, Drawing, Point, PolylineEdge};
use crate::sanitizer::StrokeFamily;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FixtureKind {
    /// Circle vertices; every edge runs through the center along its own
    /// pair of spokes, so any two edges meet there.
    StarCenter,
    /// Two strokes touching once.
    TouchingPair,
    /// Strokes sharing one common segment.
    CoincidentBundle,
    /// A convex `K_4` whose edge `01` makes a loop crossing itself once.
    SelfCrossing,
}

impl FixtureKind {
    pub const ALL: [FixtureKind; 4] =
        [FixtureKind::StarCenter, FixtureKind::TouchingPair, FixtureKind::CoincidentBundle, FixtureKind::SelfCrossing];

    pub fn name(self) -> &'static str {
        match self {
            FixtureKind::StarCenter => "star-center",
            FixtureKind::TouchingPair => "touching-pair",
            FixtureKind::CoincidentBundle => "coincident-bundle",
            FixtureKind::SelfCrossing => "self-crossing",
        }
    }

    pub fn parse(s: &str) -> Option<FixtureKind> {
        FixtureKind::ALL.into_iter().find(|k| k.name() == s)
    }
}

/// `size` is the vertex count of a star and the strand count of a bundle.
/// `adjacent` makes the touching pair or the bundle strands share a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FixtureParams {
    pub size: usize,
    pub adjacent: bool,
}

impl Default for FixtureParams {
    fn default() -> Self {
        FixtureParams { size: 4, adjacent: false }
    }
}

pub fn gen_degenerate_fixture(kind: FixtureKind, params: FixtureParams) -> Result<StrokeFamily> {
    match kind {
        FixtureKind::StarCenter => star_center(params.size),
        FixtureKind::TouchingPair => touching_pair(params.adjacent),
        FixtureKind::CoincidentBundle => bundle(params.size, params.adjacent),
        FixtureKind::SelfCrossing => self_crossing(),
    }
}

fn pts(v: &[(i64, i64)]) -> Vec<Point> {
    v.iter().map(|&(x, y)| Point::int(x, y)).collect()
}

/// Spoke `h_ij` bends at a point beside the midpoint of `p_i O`; the side
/// offset grows with the counterclockwise distance from `i` to `j`. Spokes
/// of one vertex are nested, so they only share `p_i` and the center, and
/// this emanation order makes adjacent edges cross at the center.
fn star_center(n: usize) -> Result<StrokeFamily> {
    if !(3..=24).contains(&n) {
        return Err(Error::Unsupported("star-center fixtures have 3..=24 vertices".into()));
    }
    const R: f64 = (1u64 << 20) as f64;
    let verts: Vec<(i64, i64)> = (0..n)
        .map(|i| {
            let a = TAU * i as f64 / n as f64;
            ((R * a.cos()).round() as i64, (R * a.sin()).round() as i64)
        })
        .collect();
    let bend = |i: usize, j: usize| {
        let (x, y) = verts[i];
        let s = ((j + n - i) % n) as i64 - (n / 2) as i64;
        let d = 8 * n as i64;
        Point::new(frac(x, 2) + frac(-y * s, d), frac(y, 2) + frac(x * s, d))
    };
    let center = Point::new(int(0), int(0));
    let vertices = pts(&verts);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let chain = vec![vertices[i].clone(), bend(i, j), center.clone(), bend(j, i), vertices[j].clone()];
            edges.push(PolylineEdge::new(i, j, chain));
        }
    }
    Drawing::new(vertices, edges)
}

/// Edge `01` is straight; the other stroke dips onto it at `(5, 0)`.
fn touching_pair(adjacent: bool) -> Result<StrokeFamily> {
    if adjacent {
        let v = pts(&[(0, 0), (10, 0), (5, 6)]);
        let bent = pts(&[(0, 0), (2, 3), (5, 0), (8, 3), (5, 6)]);
        Drawing::new(
            v.clone(),
            vec![PolylineEdge::new(0, 1, vec![v[0].clone(), v[1].clone()]), PolylineEdge::new(0, 2, bent)],
        )
    } else {
        let v = pts(&[(0, 0), (10, 0), (2, 4), (8, 4)]);
        let bent = pts(&[(2, 4), (5, 0), (8, 4)]);
        Drawing::new(
            v.clone(),
            vec![PolylineEdge::new(0, 1, vec![v[0].clone(), v[1].clone()]), PolylineEdge::new(2, 3, bent)],
        )
    }
}

/// `k` strands through the segment from `(20, c)` to `(40, c)`. Separate
/// strands enter top to bottom and leave bottom to top, so every two of them
/// cross along the shared piece. With `adjacent` all strands start at vertex
/// 0 and fan out after the shared piece.
fn bundle(k: usize, adjacent: bool) -> Result<StrokeFamily> {
    if !(2..=16).contains(&k) {
        return Err(Error::Unsupported("coincident bundles have 2..=16 strands".into()));
    }
    let k = k as i64;
    if adjacent {
        let mut v = vec![(0, 0)];
        v.extend((0..k).map(|i| (40, 10 * (2 * i - (k - 1)))));
        let v = pts(&v);
        let joint = Point::int(20, 0);
        let edges =
            (1..v.len()).map(|i| PolylineEdge::new(0, i, vec![v[0].clone(), joint.clone(), v[i].clone()])).collect();
        return Drawing::new(v, edges);
    }
    let c = 5 * (k - 1);
    let mut v: Vec<(i64, i64)> = (0..k).map(|i| (0, 10 * i)).collect();
    v.extend((0..k).map(|i| (60, 10 * (k - 1 - i))));
    let v = pts(&v);
    let (l, r) = (Point::int(20, c), Point::int(40, c));
    let k = k as usize;
    let edges = (0..k)
        .map(|i| PolylineEdge::new(i, k + i, vec![v[i].clone(), l.clone(), r.clone(), v[k + i].clone()]))
        .collect();
    Drawing::new(v, edges)
}

fn self_crossing() -> Result<StrokeFamily> {
    let v = pts(&[(0, 0), (10, 0), (10, 10), (0, 10)]);
    let mut edges = Vec::new();
    for a in 0..4 {
        for b in a + 1..4 {
            let chain = if (a, b) == (0, 1) {
                pts(&[(0, 0), (7, -3), (5, -5), (3, -3), (10, 0)])
            } else {
                vec![v[a].clone(), v[b].clone()]
            };
            edges.push(PolylineEdge::new(a, b, chain));
        }
    }
    Drawing::new(v, edges)
}
