//! Flower drawings: every pair of edges crosses, adjacent pairs exactly once.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::{crossing_matrix, CrossingMatrix, Drawing, Mode, Point, PolylineEdge};

/// Grid scale; the unit circle becomes a circle of this radius in integers.
const SCALE: f64 = (1u64 << 24) as f64;
const MAX_POINTS: usize = 1 << 10;

#[derive(Clone, Debug, PartialEq)]
pub struct FlowerParams {
    pub n: usize,
    /// `radii[s - 1]` is the offset of the arc point for pairs `s` steps apart.
    pub radii: Vec<f64>,
    /// Points per arc at the first refinement level.
    pub discretization: usize,
}

impl FlowerParams {
    pub fn new(n: usize) -> Self {
        let d = n / 2;
        FlowerParams { n, radii: (1..=d).map(|i| 1.0 / (2.0 * (i as f64 + 1.0))).collect(), discretization: 8 }
    }

    fn check(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::PreconditionViolated("flower needs n >= 2".into()));
        }
        if self.discretization < 8 {
            return Err(Error::PreconditionViolated("discretization below 8".into()));
        }
        let d = self.n / 2;
        if self.radii.len() != d {
            return Err(Error::DegenerateRadii(format!("expected {d} radii, got {}", self.radii.len())));
        }
        let r = &self.radii;
        if r.iter().any(|&x| !(x > 0.0 && x < 1.0)) {
            return Err(Error::DegenerateRadii("radii must lie strictly between 0 and 1".into()));
        }
        if let Some(w) = r.windows(2).find(|w| w[0] <= w[1]) {
            return Err(Error::DegenerateRadii(format!("radii not strictly decreasing at {} <= {}", w[0], w[1])));
        }
        Ok(())
    }
}

fn grid(x: f64, y: f64) -> Point {
    Point::int((x * SCALE).round() as i64, (y * SCALE).round() as i64)
}

fn unit(n: usize, k: usize) -> (f64, f64) {
    let t = 2.0 * PI * k as f64 / n as f64;
    (t.cos(), t.sin())
}

/// The arc point `c` for the pair `a, b` of unit vectors.
fn arc_point(a: (f64, f64), b: (f64, f64), r: f64) -> (f64, f64) {
    let m = ((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0);
    let len = m.0.hypot(m.1);
    if len > 1e-9 {
        // Of the two points on the perpendicular through the center, the
        // one on the far side from the chord.
        (-r * m.0 / len, -r * m.1 / len)
    } else {
        let (dx, dy) = (b.0 - a.0, b.1 - a.1);
        let l = dx.hypot(dy);
        let u = (-dy / l, dx / l);
        let pick = if u.1.abs() > 1e-12 { u.1 > 0.0 } else { u.0 > 0.0 };
        if pick {
            (r * u.0, r * u.1)
        } else {
            (-r * u.0, -r * u.1)
        }
    }
}

/// Samples of the circular arc from `a` to `b` through `c`, endpoints included.
fn arc_samples(a: (f64, f64), b: (f64, f64), c: (f64, f64), m: usize) -> Vec<(f64, f64)> {
    // Circumcenter of a, b, c.
    let d = 2.0 * (a.0 * (b.1 - c.1) + b.0 * (c.1 - a.1) + c.0 * (a.1 - b.1));
    let sq = |p: (f64, f64)| p.0 * p.0 + p.1 * p.1;
    let qx = (sq(a) * (b.1 - c.1) + sq(b) * (c.1 - a.1) + sq(c) * (a.1 - b.1)) / d;
    let qy = (sq(a) * (c.0 - b.0) + sq(b) * (a.0 - c.0) + sq(c) * (b.0 - a.0)) / d;
    let rad = (a.0 - qx).hypot(a.1 - qy);
    let ang = |p: (f64, f64)| (p.1 - qy).atan2(p.0 - qx);
    let norm = |t: f64| t.rem_euclid(2.0 * PI);
    let (ta, tb, tc) = (ang(a), ang(b), ang(c));
    let ccw_b = norm(tb - ta);
    let ccw_c = norm(tc - ta);
    let sweep = if ccw_c < ccw_b { ccw_b } else { ccw_b - 2.0 * PI };
    (0..=m)
        .map(|k| {
            let t = ta + sweep * k as f64 / m as f64;
            (qx + rad * t.cos(), qy + rad * t.sin())
        })
        .collect()
}

fn build(p: &FlowerParams, m: usize) -> Result<Drawing> {
    let n = p.n;
    let verts: Vec<Point> = (0..n)
        .map(|k| {
            let (x, y) = unit(n, k);
            grid(x, y)
        })
        .collect();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let s = (b - a).min(n - (b - a));
            let (ua, ub) = (unit(n, a), unit(n, b));
            let c = arc_point(ua, ub, p.radii[s - 1]);
            let samples = arc_samples(ua, ub, c, m);
            let mut chain = vec![verts[a].clone()];
            for &(x, y) in &samples[1..m] {
                let q = grid(x, y);
                if chain.last() != Some(&q) {
                    chain.push(q);
                }
            }
            if chain.last() == Some(&verts[b]) {
                chain.pop();
            }
            chain.push(verts[b].clone());
            edges.push(PolylineEdge::new(a, b, chain));
        }
    }
    Drawing::new(verts, edges)
}

/// Adjacent pairs cross exactly once, the others once or twice.
pub(crate) fn flower_witness(d: &Drawing, m: &CrossingMatrix) -> Option<((usize, usize), (usize, usize))> {
    m.iter()
        .find(|(e, f, p)| {
            let adjacent = e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1;
            let bad = if adjacent { p.crossing_count != 1 } else { !(1..=2).contains(&p.crossing_count) };
            bad || p.touching_count > 0 || p.has_overlap || (!adjacent && p.shares_endpoint)
        })
        .map(|(e, f, _)| {
            debug_assert!(d.edge(e.0, e.1).is_some());
            (e, f)
        })
}

/// Arcs are refined by doubling until two consecutive levels give the same
/// crossing matrix; the coarser level is returned.
pub fn gen_flower_with(p: &FlowerParams) -> Result<Drawing> {
    p.check()?;
    let mut m = p.discretization;
    let mut prev: Option<(Drawing, CrossingMatrix)> = None;
    while m <= MAX_POINTS {
        let d = build(p, m)?;
        let cur = crossing_matrix(&d, Mode::Strict).ok();
        match (prev.take(), cur) {
            (Some((pd, pm)), Some(cm)) if pm.profiles == cm.profiles => {
                if let Some((e, f)) = flower_witness(&pd, &pm) {
                    return Err(Error::DegenerateRadii(format!("pair {e:?}, {f:?} breaks the flower pattern")));
                }
                return Ok(pd);
            }
            (_, Some(cm)) => prev = Some((d, cm)),
            (_, None) => prev = None,
        }
        m *= 2;
    }
    Err(Error::DegenerateRadii("crossing matrix never stabilized under refinement".into()))
}

pub fn gen_flower(n: usize) -> Result<Drawing> {
    gen_flower_with(&FlowerParams::new(n))
}
