//! Local redraw inside a small square around one point.
//!
//! Strokes through the point are rerouted around it one at a time, each at
//! its own distance: in along its ray, around the point through one of the
//! two arcs its rays cut out, and back out along its other ray. The reroutes
//! nest like rings, so a rerouted stroke crosses exactly those rays that lie
//! in its chosen arc and belong to strokes rerouted later (or not at all).
//! Nothing outside the square moves.

use num_traits::Zero;

use super::family::{along, dyadic_root_below, Family, Passage};
use crate::error::{Error, Result};
use crate::geometry::profile::{in_ccw_sweep, Dir};
use crate::geometry::{angle_cmp, int, Coord, Point};

/// What a pair of strokes should get from the redraw.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Want {
    /// No crossing here.
    Zero,
    /// At least one crossing here.
    Cross,
}

const COMPASS: [(i64, i64); 8] = [(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)];

fn in_arc(s: &Passage, ccw: bool, d: &Dir) -> bool {
    let (a, b) = (s.prev.as_ref().unwrap(), s.next.as_ref().unwrap());
    if angle_cmp(a, d).is_eq() || angle_cmp(b, d).is_eq() {
        return false;
    }
    if ccw {
        in_ccw_sweep(a, b, d)
    } else {
        in_ccw_sweep(b, a, d)
    }
}

/// `d` expressed relative to `a`, mirrored for clockwise sweeps.
fn rel(a: &Dir, d: &Dir, ccw: bool) -> Dir {
    let dot = &a.0 * &d.0 + &a.1 * &d.1;
    let cr = &a.0 * &d.1 - &a.1 * &d.0;
    (dot, if ccw { cr } else { -cr })
}

/// Reroutes the strokes through `x`. When `x` is not a vertex the last
/// stroke is left in place. Returns whether anything moved.
pub(crate) fn surgery(f: &mut Family, x: &Point, want: &dyn Fn(usize, usize) -> Want) -> Result<bool> {
    let ps = f.passages(x);
    let is_vertex = f.is_vertex(x);
    let through: Vec<usize> = (0..ps.len()).filter(|&i| ps[i].through()).collect();
    if through.is_empty() || (through.len() == 1 && !is_vertex) {
        return Ok(false);
    }
    let rays: Vec<&Dir> = ps.iter().flat_map(Passage::rays).collect();
    for (i, a) in rays.iter().enumerate() {
        if rays[i + 1..].iter().any(|b| angle_cmp(a, b).is_eq()) {
            return Err(Error::VerificationFailed(format!("strokes run together at {x:?}")));
        }
    }

    let mut remaining = through.clone();
    let mut plan: Vec<(usize, bool)> = Vec::new();
    while !remaining.is_empty() && (is_vertex || remaining.len() > 1) {
        let others = |s: usize| -> Vec<usize> {
            remaining.iter().copied().filter(|&t| t != s).chain((0..ps.len()).filter(|&t| !ps[t].through())).collect()
        };
        let ports = |s: usize, ccw: bool| -> usize {
            others(s).iter().flat_map(|&t| ps[t].rays()).filter(|d| in_arc(&ps[s], ccw, d)).count()
        };
        // A stroke with an arc free of every other stroke is not sandwiched.
        let all_ports = |s: usize, ccw: bool| -> usize {
            (0..ps.len()).filter(|&t| t != s).flat_map(|t| ps[t].rays()).filter(|d| in_arc(&ps[s], ccw, d)).count()
        };
        let s = *remaining.iter().min_by_key(|&&s| all_ports(s, true).min(all_ports(s, false))).unwrap();
        let cost = |ccw: bool| -> (usize, usize) {
            let mut c = 0;
            for t in others(s) {
                let n = ps[t].rays().filter(|d| in_arc(&ps[s], ccw, d)).count();
                let weight = if ps[t].stroke == ps[s].stroke { 4 } else { 1 };
                c += match want(ps[s].stroke, ps[t].stroke) {
                    Want::Zero if n > 0 => weight,
                    Want::Cross if n == 0 => weight,
                    _ => 0,
                };
            }
            (c, ports(s, ccw))
        };
        let ccw = cost(true) <= cost(false);
        plan.push((s, ccw));
        remaining.retain(|&t| t != s);
    }
    if plan.is_empty() {
        return Ok(false);
    }

    let r = match f.clearance2(x) {
        Some(c) => dyadic_root_below(&(c / int(8))),
        None => Coord::from_integer(1.into()),
    };
    let mut samples: Vec<Dir> = rays.iter().map(|&d| d.clone()).collect();
    samples.extend(COMPASS.iter().map(|&(a, b)| (int(a), int(b))));
    samples.sort_by(angle_cmp);
    samples.dedup_by(|a, b| angle_cmp(a, b).is_eq());

    let m = plan.len() as i64;
    let mut edits: Vec<(usize, usize, Vec<Point>)> = Vec::new();
    for (k, &(s, ccw)) in plan.iter().enumerate() {
        let rho = &r * Coord::new((m - k as i64).into(), (4 * m).into());
        let p = &ps[s];
        let (a, b) = (p.prev.as_ref().unwrap(), p.next.as_ref().unwrap());
        let mut sweep: Vec<&Dir> = samples.iter().filter(|d| in_arc(p, ccw, d)).collect();
        sweep.sort_by(|u, v| angle_cmp(&rel(a, u, ccw), &rel(a, v, ccw)));
        let mut pts = vec![along(x, a, &r), along(x, a, &rho)];
        pts.extend(sweep.into_iter().map(|d| along(x, d, &rho)));
        pts.push(along(x, b, &rho));
        pts.push(along(x, b, &r));
        debug_assert!(!rho.is_zero());
        edits.push((p.stroke, p.idx, pts));
    }
    edits.sort_by(|a, b| (a.0, b.1).cmp(&(b.0, a.1)));
    for (s, idx, pts) in edits {
        f.chains[s].splice(idx..=idx, pts);
    }
    Ok(true)
}
