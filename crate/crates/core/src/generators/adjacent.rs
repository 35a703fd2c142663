//! Redrawing the ends of edges so that adjacent edges cross.
//!
//! Around every vertex `v` take a disk that meets only the first segments of
//! the edges at `v`. Inside it each edge leaves `v` at the mirrored angle and
//! spirals out to where it used to cross the disk boundary. Leaving in the
//! reverse cyclic order and arriving in the original one makes every two of
//! these spirals cross once, and nothing outside the disks changes.

use std::f64::consts::TAU;

use num_rational::BigRational;

use crate::classify::simplicity_of;
use crate::error::{Error, Result};
use crate::geometry::{crossing_matrix, Drawing, Mode, Point, PolylineEdge};

/// Largest angle swept by one spiral segment.
const STEP: f64 = 0.05;

fn exact(v: f64) -> BigRational {
    BigRational::from_float(v).expect("finite coordinate")
}

fn seg_dist(p: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let len2 = dx * dx + dy * dy;
    let t = if len2 == 0.0 { 0.0 } else { (((p.0 - a.0) * dx + (p.1 - a.1) * dy) / len2).clamp(0.0, 1.0) };
    (p.0 - a.0 - t * dx).hypot(p.1 - a.1 - t * dy)
}

/// An edge end at a vertex: edge id and whether the chain starts there.
type End = (usize, bool);

fn first_segment(d: &Drawing, (e, at_start): End) -> (&Point, &Point) {
    let c = &d.edges[e].chain;
    if at_start {
        (&c[0], &c[1])
    } else {
        (&c[c.len() - 1], &c[c.len() - 2])
    }
}

/// Radius of the redraw disk around `v`.
fn disk_radius(d: &Drawing, v: usize, ends: &[End]) -> f64 {
    let c = d.vertices[v].to_f64();
    let mut r = f64::INFINITY;
    for (w, p) in d.vertices.iter().enumerate() {
        if w != v {
            let q = p.to_f64();
            r = r.min((q.0 - c.0).hypot(q.1 - c.1));
        }
    }
    for (e, edge) in d.edges.iter().enumerate() {
        let m = edge.chain.len() - 1;
        for (k, (a, b)) in edge.segments().enumerate() {
            let is_first = ends.iter().any(|&(f, s)| f == e && k == if s { 0 } else { m - 1 });
            let (a, b) = (a.to_f64(), b.to_f64());
            if is_first {
                r = r.min((b.0 - a.0).hypot(b.1 - a.1));
            } else {
                r = r.min(seg_dist(c, a, b));
            }
        }
    }
    r / 4.0
}

/// Spiral from vertex `v` to the exit point of each end, in the ends' order.
fn spirals(d: &Drawing, v: usize, ends: &[End]) -> Result<Vec<Vec<Point>>> {
    let r = disk_radius(d, v, ends);
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::PreconditionViolated(format!("no free disk around vertex {v}")));
    }
    let g = 2f64.powi(r.log2().floor() as i32 - 30);
    let vp = &d.vertices[v];
    let c = vp.to_f64();
    let at = |x: f64, y: f64| {
        let snap = |t: f64| exact((t / g).round() * g);
        Point::new(&vp.x + snap(x), &vp.y + snap(y))
    };
    let mut exits = Vec::with_capacity(ends.len());
    let mut theta = Vec::with_capacity(ends.len());
    for &end in ends {
        let (a, b) = first_segment(d, end);
        let bf = b.to_f64();
        let len = (bf.0 - c.0).hypot(bf.1 - c.1);
        let p = a.lerp(b, &exact(r / len));
        let pf = p.to_f64();
        theta.push((pf.1 - c.1).atan2(pf.0 - c.0).rem_euclid(TAU));
        exits.push(p);
    }
    let mut order: Vec<usize> = (0..ends.len()).collect();
    order.sort_by(|&i, &j| theta[i].total_cmp(&theta[j]));
    let mut gap = TAU;
    for w in 0..order.len() {
        let next = if w + 1 < order.len() { theta[order[w + 1]] } else { theta[order[0]] + TAU };
        gap = gap.min(next - theta[order[w]]);
    }
    // Small rank-based tilt so that no three spirals meet in one point.
    let tilt = gap / (4.0 * ends.len() as f64);
    let mut rank = vec![0; ends.len()];
    for (k, &i) in order.iter().enumerate() {
        rank[i] = k;
    }
    let r0 = r / 4.0;
    let mut out = Vec::with_capacity(ends.len());
    for i in 0..ends.len() {
        let pf = exits[i].to_f64();
        let rho = (pf.0 - c.0).hypot(pf.1 - c.1);
        let alpha = TAU - theta[i] + tilt * rank[i] as f64;
        let sweep = theta[i] - alpha;
        let steps = ((sweep.abs() / STEP).ceil() as usize).max(8);
        let mut chain = vec![vp.clone()];
        for k in 0..steps {
            let t = k as f64 / steps as f64;
            let (rad, ang) = (r0 + t * (rho - r0), alpha + t * sweep);
            chain.push(at(rad * ang.cos(), rad * ang.sin()));
        }
        chain.push(exits[i].clone());
        chain.dedup();
        out.push(chain);
    }
    Ok(out)
}

/// Redraws the initial part of every edge at every vertex so that the edges
/// leave each vertex in the opposite cyclic order. Starting from a simple
/// drawing, every adjacent pair then crosses and every other pair keeps its
/// profile.
pub fn gen_adjacent_crossing(base: &Drawing) -> Result<Drawing> {
    let before = crossing_matrix(base, Mode::Strict)?;
    if !simplicity_of(&before).simple {
        return Err(Error::PreconditionViolated("base drawing must be simple".into()));
    }
    let mut heads: Vec<Option<Vec<Point>>> = vec![None; base.edges.len()];
    let mut tails: Vec<Option<Vec<Point>>> = vec![None; base.edges.len()];
    for v in 0..base.n() {
        let ends: Vec<End> =
            base.edges.iter().enumerate().filter(|(_, e)| e.u == v || e.v == v).map(|(i, e)| (i, e.u == v)).collect();
        if ends.len() < 2 {
            continue;
        }
        for (&(e, at_start), s) in ends.iter().zip(spirals(base, v, &ends)?) {
            if at_start {
                heads[e] = Some(s);
            } else {
                tails[e] = Some(s.into_iter().rev().collect());
            }
        }
    }
    let edges = base
        .edges
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let m = e.chain.len();
            let mut chain = heads[i].clone().unwrap_or_else(|| vec![e.chain[0].clone()]);
            chain.extend(e.chain[1..m - 1].iter().cloned());
            match &tails[i] {
                Some(t) => chain.extend(t.iter().cloned()),
                None => chain.push(e.chain[m - 1].clone()),
            }
            PolylineEdge::new(e.u, e.v, chain)
        })
        .collect();
    let out = Drawing::new(base.vertices.clone(), edges)?;
    let after = crossing_matrix(&out, Mode::Strict)?;
    for (&k, p) in &after.profiles {
        let (e, f) = (&out.edges[k.0], &out.edges[k.1]);
        let ok = if e.is_adjacent(f) { p.crossing_count >= 1 } else { p == &before.profiles[&k] };
        if !ok {
            return Err(Error::VerificationFailed(format!(
                "redrawn pair {:?} {:?} has profile {p:?}",
                e.key(),
                f.key()
            )));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::simplicity;
    use crate::generators::{gen_convex, gen_flower};

    #[test]
    fn convex_four_becomes_separate_simple_only() {
        let d = gen_adjacent_crossing(&gen_convex(4)).unwrap();
        let r = simplicity(&d).unwrap();
        assert!(r.separate_simple && !r.adjacent_simple);
        let m = crossing_matrix(&d, Mode::Strict).unwrap();
        assert_eq!(m.between((0, 2), (1, 3)).unwrap().crossing_count, 1);
    }

    #[test]
    fn triangle_pairs_all_cross() {
        let d = gen_adjacent_crossing(&gen_convex(3)).unwrap();
        let m = crossing_matrix(&d, Mode::Strict).unwrap();
        assert!(m.iter().all(|(_, _, p)| p.crossing_count >= 1));
    }

    #[test]
    fn larger_bases_keep_separate_profiles() {
        use crate::generators::gen_twisted;
        for base in [gen_convex(7), gen_twisted(5)] {
            let d = gen_adjacent_crossing(&base).unwrap();
            let m = crossing_matrix(&d, Mode::Strict).unwrap();
            let counts: Vec<usize> = m
                .iter()
                .filter(|(e, f, _)| crate::classify::adjacent(*e, *f))
                .map(|(_, _, p)| p.crossing_count)
                .collect();
            assert!(counts.iter().all(|&c| c % 2 == 1), "{counts:?}");
        }
    }

    #[test]
    fn non_simple_base_is_rejected() {
        let d = gen_flower(5).unwrap();
        assert!(matches!(gen_adjacent_crossing(&d), Err(Error::PreconditionViolated(_))));
    }
}
