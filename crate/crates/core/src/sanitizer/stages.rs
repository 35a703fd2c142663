use std::collections::BTreeMap;

use serde::Serialize;

use super::family::{seg_dist2, Family};
use super::report::{check_stroke_conditions, family_report, passes_through, self_contacts};
use super::surgery::{surgery, Want};
use super::{SanitizeMode, StrokeFamily};
use crate::classify::simplicity;
use crate::error::{Error, Result};
use crate::geometry::profile::{in_ccw_sweep, Dir};
use crate::geometry::{
    angle_cmp, chain_contacts, check_mild_assumptions, dist2, frac, int, intersect_segments, on_segment, Coord,
    Drawing, EdgeKey, EventKind, Location, Point,
};

/// No crossings with itself or with adjacent strokes, at least one with
/// everything else.
fn default_want(f: &Family) -> impl Fn(usize, usize) -> Want + '_ {
    move |s, t| if s == t || f.adjacent(s, t) { Want::Zero } else { Want::Cross }
}

fn redraw_at(f: &mut Family, x: &Point) -> Result<bool> {
    f.subdivide(x);
    let snapshot = f.clone();
    let want = default_want(&snapshot);
    surgery(f, x, &want)
}

/// Identical segments used by several strands, keyed by their sorted ends.
fn coincident_links(f: &Family) -> BTreeMap<(Point, Point), Vec<(usize, usize)>> {
    let mut links: BTreeMap<(Point, Point), Vec<(usize, usize)>> = BTreeMap::new();
    for (s, chain) in f.chains.iter().enumerate() {
        for (i, w) in chain.windows(2).enumerate() {
            let k = if w[0] < w[1] { (w[0].clone(), w[1].clone()) } else { (w[1].clone(), w[0].clone()) };
            links.entry(k).or_default().push((s, i));
        }
    }
    links.retain(|_, v| v.len() >= 2);
    links
}

/// Cuts every chain at each joint that lies on a shared piece, so shared
/// pieces become identical segments.
fn align_overlaps(f: &mut Family) {
    let mut cuts: Vec<Point> = Vec::new();
    let joints: Vec<Point> = f.vertices.iter().chain(f.chains.iter().flatten()).cloned().collect();
    for (s, chain) in f.chains.iter().enumerate() {
        let mut overlaps = self_contacts(chain).overlaps;
        for other in &f.chains[s + 1..] {
            for ev in chain_contacts(chain, other).overlaps {
                if let Location::Segment(a, b) = ev.location {
                    overlaps.push((a, b));
                }
            }
        }
        for (a, b) in overlaps {
            cuts.extend(joints.iter().filter(|p| on_segment(&a, &b, p)).cloned());
        }
    }
    cuts.sort();
    cuts.dedup();
    for p in &cuts {
        f.subdivide(p);
    }
}

fn perp(d: &Dir) -> Dir {
    (-d.1.clone(), d.0.clone())
}

fn add(p: &Point, d: &Dir, t: &Coord) -> Point {
    Point::new(&p.x + &d.0 * t, &p.y + &d.1 * t)
}

/// Is some ray at `x` other than along `u` inside the wedge between `u`
/// and `u` tilted by `tilt` to either side?
fn wedge_blocked(f: &Family, x: &Point, u: &Dir, tilt: &Coord) -> bool {
    let n = perp(u);
    let lo = (&u.0 - &n.0 * tilt, &u.1 - &n.1 * tilt);
    let hi = (&u.0 + &n.0 * tilt, &u.1 + &n.1 * tilt);
    f.passages(x).iter().flat_map(|p| p.rays().cloned().collect::<Vec<_>>()).any(|d| {
        !angle_cmp(&d, u).is_eq()
            && (in_ccw_sweep(&lo, &hi, &d) || angle_cmp(&d, &lo).is_eq() || angle_cmp(&d, &hi).is_eq())
    })
}

/// Replaces the strands of one shared segment by thin parallel lanes.
fn unpack_link(f: &mut Family, x: &Point, y: &Point, strands: &[(usize, usize)]) -> Result<()> {
    let u = y.sub(x);
    let len2 = dist2(x, y);
    let mut bound: Option<Coord> = None;
    let mut take = |d: Coord| {
        if bound.as_ref().is_none_or(|b| &d < b) {
            bound = Some(d);
        }
    };
    for p in f.vertices.iter().chain(f.chains.iter().flatten()) {
        if p != x && p != y {
            take(seg_dist2(p, x, y));
        }
    }
    for w in f.chains.iter().flat_map(|c| c.windows(2)) {
        let touches = [x, y].iter().any(|&e| on_segment(&w[0], &w[1], e));
        if !touches && intersect_segments(&w[0], &w[1], x, y).is_none() {
            take(seg_dist2(x, &w[0], &w[1]));
            take(seg_dist2(y, &w[0], &w[1]));
        }
    }
    let m = strands.len() as i64;
    let spread = int(m - 1);
    let mut delta = frac(1, 8 * (m - 1));
    loop {
        let w2 = &delta * &delta * &spread * &spread * &len2;
        let clear = bound.as_ref().is_none_or(|b| w2 * int(16) <= *b);
        let tilt = &delta * &spread * int(16);
        let back = (-u.0.clone(), -u.1.clone());
        if clear && !wedge_blocked(f, x, &u, &tilt) && !wedge_blocked(f, y, &back, &tilt) {
            break;
        }
        delta /= int(2);
        if delta < frac(1, 1 << 40) {
            return Err(Error::VerificationFailed(format!("no room to unpack the piece {x:?} {y:?}")));
        }
    }
    let n = perp(&u);
    let quarter = frac(1, 4);
    let three = frac(3, 4);
    let mut edits: Vec<(usize, usize, Vec<Point>)> = Vec::new();
    for (j, &(s, idx)) in strands.iter().enumerate() {
        let o = &delta * int(m - 1 - 2 * j as i64);
        let a = add(&add(x, &u, &quarter), &n, &o);
        let b = add(&add(x, &u, &three), &n, &o);
        let lane = if &f.chains[s][idx] == x { vec![a, b] } else { vec![b, a] };
        edits.push((s, idx, lane));
    }
    edits.sort_by(|p, q| q.0.cmp(&p.0).then(q.1.cmp(&p.1)));
    for (s, idx, lane) in edits {
        f.chains[s].splice(idx + 1..idx + 1, lane);
    }
    Ok(())
}

fn unpack_family(f: &mut Family) -> Result<()> {
    align_overlaps(f);
    let mut ends: Vec<Point> = Vec::new();
    while let Some(((x, y), strands)) = coincident_links(f).into_iter().next() {
        unpack_link(f, &x, &y, &strands)?;
        ends.push(x);
        ends.push(y);
    }
    ends.sort();
    ends.dedup();
    for x in &ends {
        redraw_at(f, x)?;
    }
    Ok(())
}

fn vertex_passes_family(f: &mut Family) -> Result<()> {
    for w in 0..f.vertices.len() {
        let v = f.vertices[w].clone();
        if f.chains.iter().any(|c| passes_through(c, &v)) {
            redraw_at(f, &v)?;
        }
    }
    Ok(())
}

fn touchings_family(f: &mut Family) -> Result<()> {
    let budget = 4 * (family_report(f).touchings.len() + 1);
    for _ in 0..budget {
        let Some(t) = family_report(f).touchings.into_iter().next() else {
            return Ok(());
        };
        if !redraw_at(f, &t.at)? {
            return Err(Error::VerificationFailed(format!("touching at {:?} did not move", t.at)));
        }
    }
    Err(Error::VerificationFailed("touchings keep reappearing".into()))
}

fn self_crossings_family(f: &mut Family) -> Result<()> {
    let budget = 4 * (family_report(f).self_crossings.len() + 1);
    for _ in 0..budget {
        let found = f.chains.iter().enumerate().find_map(|(s, c)| {
            self_contacts(c).points.into_iter().find(|(_, k)| *k == EventKind::ProperCrossing).map(|(p, _)| (s, p))
        });
        let Some((s, p)) = found else {
            return Ok(());
        };
        f.subdivide(&p);
        let visits: Vec<usize> = (0..f.chains[s].len()).filter(|&i| f.chains[s][i] == p).collect();
        // Running the loop between two visits backwards keeps the image and
        // turns the crossing into a touching, which the redraw separates.
        f.chains[s][visits[0] + 1..visits[1]].reverse();
        redraw_at(f, &p)?;
    }
    Err(Error::VerificationFailed("self-crossings keep reappearing".into()))
}

fn run(d: &StrokeFamily, stage: fn(&mut Family) -> Result<()>) -> Result<StrokeFamily> {
    let mut f = Family::from_drawing(d);
    stage(&mut f)?;
    f.to_drawing()
}

/// Replaces every shared piece by parallel lanes and redraws their ends.
pub fn unpack_coincident(d: &StrokeFamily) -> Result<StrokeFamily> {
    run(d, unpack_family)
}

/// Moves strokes off the vertices they pass through.
pub fn resolve_vertex_passes(d: &StrokeFamily) -> Result<StrokeFamily> {
    run(d, vertex_passes_family)
}

/// Redraws around each touching point until none is left. Shared pieces
/// are unpacked first, since a redraw needs distinct directions.
pub fn resolve_touchings(d: &StrokeFamily) -> Result<StrokeFamily> {
    run(d, |f| {
        if !coincident_links(f).is_empty() || !family_report(f).coincident_runs.is_empty() {
            unpack_family(f)?;
        }
        touchings_family(f)
    })
}

pub fn resolve_self_crossings(d: &StrokeFamily) -> Result<StrokeFamily> {
    run(d, self_crossings_family)
}

/// Vertices kept in increasing order: a vertex is skipped when it lies on an
/// edge between kept vertices, or when one of its edges to a kept vertex runs
/// through another kept vertex.
pub fn greedy_vertices(d: &StrokeFamily) -> Vec<usize> {
    let mut kept: Vec<usize> = Vec::new();
    let through = |u: usize, w: usize, v: usize| {
        d.edge(u, w).is_some_and(|e| e.segments().any(|(a, b)| on_segment(a, b, &d.vertices[v])))
    };
    for v in 0..d.n() {
        let on_kept_edge = kept.iter().any(|&u| kept.iter().any(|&w| u < w && through(u, w, v)));
        let blocked = kept.iter().any(|&u| kept.iter().any(|&w| w != u && through(v, u, w)));
        if !on_kept_edge && !blocked {
            kept.push(v);
        }
    }
    kept
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    /// Stroke pairs that met in the input, among kept vertices.
    pub intersecting_before: usize,
    /// Pairs that were disjoint in the input.
    pub disjoint_before: Vec<(EdgeKey, EdgeKey)>,
    /// Pairs that are disjoint in the output. Always a subset of the above.
    pub disjoint_after: Vec<(EdgeKey, EdgeKey)>,
}

#[derive(Clone, Debug)]
pub struct Sanitized {
    pub drawing: Drawing,
    pub kept_vertices: Vec<usize>,
    pub certificate: Certificate,
}

fn disjoint_pairs(d: &Drawing) -> Vec<(EdgeKey, EdgeKey)> {
    let mut out = Vec::new();
    for (i, e) in d.edges.iter().enumerate() {
        for f in &d.edges[i + 1..] {
            let c = chain_contacts(&e.chain, &f.chain);
            if c.points.is_empty() && c.overlaps.is_empty() {
                out.push((e.key(), f.key()));
            }
        }
    }
    out
}

/// Checks the mode's condition, selects vertices in mode S, then unpacks
/// shared pieces and clears vertex passes, touchings and self-crossings.
/// The output is verified before it is returned.
pub fn sanitize(d: &StrokeFamily, mode: SanitizeMode) -> Result<Sanitized> {
    let cond = check_stroke_conditions(d);
    let holds = match mode {
        SanitizeMode::A => cond.a,
        SanitizeMode::S => cond.s,
    };
    if !holds {
        return Err(Error::ConditionViolated(mode.letter()));
    }
    let kept = match mode {
        SanitizeMode::A => (0..d.n()).collect(),
        SanitizeMode::S => greedy_vertices(d),
    };
    let input = d.induced(&kept);
    let mut f = Family::from_drawing(&input);
    unpack_family(&mut f)?;
    vertex_passes_family(&mut f)?;
    touchings_family(&mut f)?;
    self_crossings_family(&mut f)?;
    let out = f.to_drawing()?;

    let mild = check_mild_assumptions(&out);
    if !mild.passes() {
        return Err(Error::VerificationFailed(format!("output breaks the mild assumptions: {:?}", mild.violations)));
    }
    let simple = simplicity(&out)?;
    let ok = match mode {
        SanitizeMode::A => simple.adjacent_simple,
        SanitizeMode::S => simple.separate_simple,
    };
    if !ok {
        return Err(Error::VerificationFailed(format!("output is not simple enough: {:?}", simple.witnesses)));
    }
    let disjoint_before = disjoint_pairs(&input);
    let disjoint_after = disjoint_pairs(&out);
    if let Some(p) = disjoint_after.iter().find(|p| !disjoint_before.contains(p)) {
        return Err(Error::VerificationFailed(format!("pair {p:?} became disjoint")));
    }
    let m = input.edges.len();
    Ok(Sanitized {
        drawing: out,
        kept_vertices: kept,
        certificate: Certificate {
            intersecting_before: m * m.saturating_sub(1) / 2 - disjoint_before.len(),
            disjoint_before,
            disjoint_after,
        },
    })
}
