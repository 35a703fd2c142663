//! Planar arrangement of a set of polyline edges: nodes at endpoints and
//! intersections, arcs between them, faces traced by rotation order.

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{
    angle_cmp, chain_contacts, intersect_segments, on_segment, ChainPos, Coord, EdgeKey, EventKind, Location, Point,
    PolylineEdge,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

/// Piece of one input edge between two consecutive nodes.
#[derive(Clone, Debug)]
pub struct Arc {
    pub edge: usize,
    pub from: usize,
    pub to: usize,
    pub points: Vec<Point>,
    /// Face on the left of `from -> to`, then on the right.
    pub left: usize,
    pub right: usize,
}

/// Arc `arc / 2` traversed forward when `arc % 2 == 0`.
pub type Dart = usize;

#[derive(Clone, Debug)]
pub struct Cell {
    pub id: usize,
    pub bounded: bool,
    /// Closed dart walks; for a bounded cell the outer walk comes first.
    pub boundary: Vec<Vec<Dart>>,
    pub color: Option<Color>,
}

#[derive(Clone, Debug)]
pub struct ArrangementGraph {
    pub nodes: Vec<Point>,
    pub arcs: Vec<Arc>,
    pub faces: Vec<Cell>,
    /// Id of the unbounded face.
    pub outer: usize,
    pub components: usize,
}

/// A closed polyline. The last point connects back to the first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contour {
    pub points: Vec<Point>,
}

fn pos_cmp(a: &ChainPos, b: &ChainPos) -> Ordering {
    a.segment.cmp(&b.segment).then_with(|| a.t.cmp(&b.t))
}

fn normalize(pos: ChainPos, len: usize) -> ChainPos {
    // Joints are written as the start of the following segment, except the
    // last point of the chain.
    let one = Coord::from_integer(1.into());
    if pos.segment + 1 == len {
        ChainPos::new(len - 2, one)
    } else if pos.t == one && pos.segment + 2 < len {
        ChainPos::new(pos.segment + 1, Coord::zero())
    } else {
        pos
    }
}

/// Positions at which a chain meets itself.
fn self_cuts(chain: &[Point]) -> Result<Vec<ChainPos>> {
    let m = chain.len() - 1;
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let Some(ev) = intersect_segments(&chain[i], &chain[i + 1], &chain[j], &chain[j + 1]) else {
                continue;
            };
            if let Location::Segment(..) = ev.location {
                return Err(Error::PreconditionViolated("edge folds back onto itself".into()));
            }
            if j == i + 1 && ev.kind == EventKind::SharedEndpoint {
                continue;
            }
            out.push(ChainPos::new(i, ev.first.t));
            out.push(ChainPos::new(j, ev.second.t));
        }
    }
    Ok(out)
}

fn signed_area2(poly: &[Point]) -> Coord {
    let mut s = Coord::zero();
    for i in 0..poly.len() {
        let a = &poly[i];
        let b = &poly[(i + 1) % poly.len()];
        s += &a.x * &b.y - &a.y * &b.x;
    }
    s
}

/// Parity of crossings of the rightward horizontal ray from `p` with a closed
/// polyline. `p` must not lie on it.
fn ray_parity(poly: &[Point], p: &Point) -> bool {
    let mut inside = false;
    for i in 0..poly.len() {
        let a = &poly[i];
        let b = &poly[(i + 1) % poly.len()];
        if (a.y > p.y) != (b.y > p.y) {
            if a.x < p.x && b.x < p.x {
                continue;
            }
            if a.x > p.x && b.x > p.x {
                inside = !inside;
                continue;
            }
            // x of the edge at height p.y, compared without division.
            let lhs = (&b.x - &a.x) * (&p.y - &a.y);
            let rhs = (&p.x - &a.x) * (&b.y - &a.y);
            let right_of_p = if b.y > a.y { lhs > rhs } else { lhs < rhs };
            if right_of_p {
                inside = !inside;
            }
        }
    }
    inside
}

impl ArrangementGraph {
    pub fn dart_from(&self, d: Dart) -> usize {
        let a = &self.arcs[d / 2];
        if d % 2 == 0 {
            a.from
        } else {
            a.to
        }
    }

    /// Points of a dart in travel order.
    pub fn dart_points(&self, d: Dart) -> Vec<Point> {
        let mut pts = self.arcs[d / 2].points.clone();
        if d % 2 == 1 {
            pts.reverse();
        }
        pts
    }

    /// Closed polyline of a dart walk (first point not repeated at the end).
    pub fn walk_polygon(&self, walk: &[Dart]) -> Vec<Point> {
        let mut out = Vec::new();
        for &d in walk {
            let pts = self.dart_points(d);
            out.extend(pts[..pts.len() - 1].iter().cloned());
        }
        out
    }

    pub fn face_of_dart(&self, d: Dart) -> usize {
        let a = &self.arcs[d / 2];
        if d % 2 == 0 {
            a.left
        } else {
            a.right
        }
    }

    pub fn degree(&self, node: usize) -> usize {
        self.arcs.iter().map(|a| usize::from(a.from == node) + usize::from(a.to == node)).sum()
    }

    pub fn euler_holds(&self) -> bool {
        let v = self.nodes.len() as i64;
        let e = self.arcs.len() as i64;
        let f = self.faces.len() as i64;
        v - e + f == 1 + self.components as i64
    }

    pub fn on_arrangement(&self, p: &Point) -> bool {
        self.arcs.iter().any(|a| a.points.windows(2).any(|w| on_segment(&w[0], &w[1], p)))
    }
}

/// Builds the arrangement. Touching edges are rejected; crossings, shared
/// endpoints, ends resting on other edges, and self-crossings all become
/// nodes.
pub fn build_arrangement(edges: &[PolylineEdge]) -> Result<ArrangementGraph> {
    let mut cuts: Vec<Vec<ChainPos>> = Vec::with_capacity(edges.len());
    for e in edges {
        if e.chain.len() < 2 {
            return Err(Error::PreconditionViolated("edge with fewer than two points".into()));
        }
        let last = e.chain.len() - 2;
        let mut c = vec![ChainPos::new(0, Coord::zero()), ChainPos::new(last, Coord::from_integer(1.into()))];
        c.extend(self_cuts(&e.chain)?);
        cuts.push(c);
    }
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let con = chain_contacts(&edges[i].chain, &edges[j].chain);
            if !con.overlaps.is_empty() {
                return Err(Error::PreconditionViolated(format!("edges {i} and {j} overlap")));
            }
            for c in con.points {
                if c.kind == EventKind::Touching {
                    return Err(Error::TouchingPresent(Box::new(c.at)));
                }
                cuts[i].push(c.first);
                cuts[j].push(c.second);
            }
        }
    }

    let mut nodes: Vec<Point> = Vec::new();
    let mut node_of: HashMap<Point, usize> = HashMap::new();
    let mut node_id = |p: &Point, nodes: &mut Vec<Point>| -> usize {
        *node_of.entry(p.clone()).or_insert_with(|| {
            nodes.push(p.clone());
            nodes.len() - 1
        })
    };

    let mut arcs: Vec<Arc> = Vec::new();
    for (ei, e) in edges.iter().enumerate() {
        let len = e.chain.len();
        let mut c: Vec<ChainPos> = cuts[ei].drain(..).map(|p| normalize(p, len)).collect();
        c.sort_by(pos_cmp);
        c.dedup();
        let at = |p: &ChainPos| e.chain[p.segment].lerp(&e.chain[p.segment + 1], &p.t);
        for w in c.windows(2) {
            let (s, t) = (&w[0], &w[1]);
            let mut pts = vec![at(s)];
            for k in s.segment + 1..=t.segment {
                if pts.last() != Some(&e.chain[k]) {
                    pts.push(e.chain[k].clone());
                }
            }
            let end = at(t);
            if pts.last() != Some(&end) {
                pts.push(end);
            }
            let from = node_id(&pts[0], &mut nodes);
            let to = node_id(&pts[pts.len() - 1], &mut nodes);
            arcs.push(Arc { edge: ei, from, to, points: pts, left: usize::MAX, right: usize::MAX });
        }
    }
    assemble(nodes, arcs)
}

fn assemble(nodes: Vec<Point>, mut arcs: Vec<Arc>) -> Result<ArrangementGraph> {
    let n = nodes.len();
    // Darts around each node, sorted counterclockwise by leaving direction.
    let mut around: Vec<Vec<Dart>> = vec![Vec::new(); n];
    let dir = |d: Dart, arcs: &[Arc]| -> (Coord, Coord) {
        let a = &arcs[d / 2];
        if d % 2 == 0 {
            a.points[1].sub(&a.points[0])
        } else {
            let k = a.points.len();
            a.points[k - 2].sub(&a.points[k - 1])
        }
    };
    for (i, a) in arcs.iter().enumerate() {
        around[a.from].push(2 * i);
        around[a.to].push(2 * i + 1);
    }
    for list in around.iter_mut() {
        list.sort_by(|&x, &y| angle_cmp(&dir(x, &arcs), &dir(y, &arcs)));
        for w in list.windows(2) {
            if angle_cmp(&dir(w[0], &arcs), &dir(w[1], &arcs)) == Ordering::Equal {
                return Err(Error::PreconditionViolated("two arcs leave a node together".into()));
            }
        }
    }
    let mut slot = vec![0usize; 2 * arcs.len()];
    for list in &around {
        for (k, &d) in list.iter().enumerate() {
            slot[d] = k;
        }
    }
    let head = |d: Dart, arcs: &[Arc]| -> usize {
        let a = &arcs[d / 2];
        if d % 2 == 0 {
            a.to
        } else {
            a.from
        }
    };
    // Face on the left: at the head, take the first dart clockwise from the twin.
    let next = |d: Dart| -> Dart {
        let v = head(d, &arcs);
        let twin = d ^ 1;
        let list = &around[v];
        let k = slot[twin];
        list[(k + list.len() - 1) % list.len()]
    };

    let mut walk_of = vec![usize::MAX; 2 * arcs.len()];
    let mut walks: Vec<Vec<Dart>> = Vec::new();
    for start in 0..2 * arcs.len() {
        if walk_of[start] != usize::MAX {
            continue;
        }
        let mut w = Vec::new();
        let mut d = start;
        loop {
            walk_of[d] = walks.len();
            w.push(d);
            d = next(d);
            if d == start {
                break;
            }
        }
        walks.push(w);
    }

    // Connected components by union-find over arcs.
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    for a in &arcs {
        let (x, y) = (find(&mut parent, a.from), find(&mut parent, a.to));
        parent[x] = y;
    }
    let mut comp_id: HashMap<usize, usize> = HashMap::new();
    let comp_of_node: Vec<usize> = (0..n)
        .map(|v| {
            let r = find(&mut parent, v);
            let k = comp_id.len();
            *comp_id.entry(r).or_insert(k)
        })
        .collect();
    let components = comp_id.len();

    let tmp = ArrangementGraph { nodes, arcs: arcs.clone(), faces: Vec::new(), outer: 0, components };
    let polys: Vec<Vec<Point>> = walks.iter().map(|w| tmp.walk_polygon(w)).collect();
    let areas: Vec<Coord> = polys.iter().map(|p| signed_area2(p)).collect();

    // Positive walks bound faces; each component has one non-positive walk,
    // its outer boundary, which is a hole of some face (or of the outside).
    let mut faces: Vec<Cell> = vec![Cell { id: 0, bounded: false, boundary: Vec::new(), color: None }];
    let mut face_of_walk = vec![usize::MAX; walks.len()];
    for (i, a) in areas.iter().enumerate() {
        if a.is_positive() {
            face_of_walk[i] = faces.len();
            faces.push(Cell { id: faces.len(), bounded: true, boundary: vec![walks[i].clone()], color: None });
        }
    }
    for (i, a) in areas.iter().enumerate() {
        if a.is_positive() {
            continue;
        }
        let first = tmp.dart_from(walks[i][0]);
        let comp = comp_of_node[first];
        let probe = &tmp.nodes[first];
        let mut best: Option<usize> = None;
        for (j, b) in areas.iter().enumerate() {
            if !b.is_positive() || comp_of_node[tmp.dart_from(walks[j][0])] == comp {
                continue;
            }
            if ray_parity(&polys[j], probe) && best.is_none_or(|k| areas[j] < areas[k]) {
                best = Some(j);
            }
        }
        let f = best.map_or(0, |j| face_of_walk[j]);
        face_of_walk[i] = f;
        faces[f].boundary.push(walks[i].clone());
    }
    for (i, w) in walks.iter().enumerate() {
        for &d in w {
            let a = &mut arcs[d / 2];
            if d % 2 == 0 {
                a.left = face_of_walk[i];
            } else {
                a.right = face_of_walk[i];
            }
        }
    }
    Ok(ArrangementGraph { arcs, faces, outer: 0, ..tmp })
}

/// Proper two-coloring of the faces with the unbounded face white.
pub fn chessboard_coloring(a: &ArrangementGraph) -> Result<ArrangementGraph> {
    if (0..a.nodes.len()).any(|v| a.degree(v) % 2 == 1) {
        return Err(Error::NotTwoColorable);
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); a.faces.len()];
    for arc in &a.arcs {
        if arc.left == arc.right {
            return Err(Error::NotTwoColorable);
        }
        adj[arc.left].push(arc.right);
        adj[arc.right].push(arc.left);
    }
    let mut color: Vec<Option<Color>> = vec![None; a.faces.len()];
    let mut queue = VecDeque::new();
    color[a.outer] = Some(Color::White);
    queue.push_back(a.outer);
    while let Some(f) = queue.pop_front() {
        let c = color[f].expect("queued faces are colored");
        let other = if c == Color::White { Color::Black } else { Color::White };
        for &g in &adj[f] {
            match color[g] {
                None => {
                    color[g] = Some(other);
                    queue.push_back(g);
                }
                Some(cg) if cg == c => return Err(Error::NotTwoColorable),
                Some(_) => {}
            }
        }
    }
    let mut out = a.clone();
    for (face, c) in out.faces.iter_mut().zip(color) {
        // Faces unreachable from the outside cannot exist in a plane map.
        face.color = Some(c.ok_or(Error::NotTwoColorable)?);
    }
    Ok(out)
}

/// Face containing `p`: the smallest bounded outer walk whose ray parity
/// says it contains `p`, or the unbounded face.
pub fn locate_cell(a: &ArrangementGraph, p: &Point) -> Result<usize> {
    if a.on_arrangement(p) {
        return Err(Error::OnBoundary(Box::new(p.clone())));
    }
    let mut best: Option<(Coord, usize)> = None;
    for f in a.faces.iter().filter(|f| f.bounded) {
        let poly = a.walk_polygon(&f.boundary[0]);
        if ray_parity(&poly, p) {
            let area = signed_area2(&poly);
            if best.as_ref().is_none_or(|(b, _)| area < *b) {
                best = Some((area, f.id));
            }
        }
    }
    Ok(best.map_or(a.outer, |(_, id)| id))
}

/// Outer boundary of a bounded cell as a simple closed curve. Excursions
/// into the cell (dangling arcs, holes pinned to the boundary) are cut off.
pub fn contour(a: &ArrangementGraph, cell: usize) -> Result<Contour> {
    let face = &a.faces[cell];
    if !face.bounded {
        return Err(Error::UnboundedCell);
    }
    let mut walk = face.boundary[0].clone();
    'outer: loop {
        let starts: Vec<usize> = walk.iter().map(|&d| a.dart_from(d)).collect();
        for i in 0..walk.len() {
            for j in i + 1..walk.len() {
                if starts[i] == starts[j] {
                    let inner: Vec<Dart> = walk[i..j].to_vec();
                    let mut rest: Vec<Dart> = walk[j..].to_vec();
                    rest.extend_from_slice(&walk[..i]);
                    let ai = signed_area2(&a.walk_polygon(&inner));
                    let ar = signed_area2(&a.walk_polygon(&rest));
                    walk = if ai > ar { inner } else { rest };
                    continue 'outer;
                }
            }
        }
        break;
    }
    let points = a.walk_polygon(&walk);
    let mut closed = points.clone();
    closed.push(points[0].clone());
    if !crate::geometry::self_intersections(&closed[..closed.len() - 1]).is_empty() {
        return Err(Error::VerificationFailed("contour is not simple".into()));
    }
    Ok(Contour { points })
}

impl Contour {
    /// Strict containment by ray parity; points on the curve are outside.
    pub fn contains(&self, p: &Point) -> bool {
        let on =
            (0..self.points.len()).any(|i| on_segment(&self.points[i], &self.points[(i + 1) % self.points.len()], p));
        !on && ray_parity(&self.points, p)
    }
}

/// Outcome of the triangle test for an extra edge `de`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleTest {
    pub applicable: bool,
    pub missed_edge: Option<EdgeKey>,
    /// Crossings of `de` with each triangle edge, in the input order.
    pub crossings: [usize; 3],
}

/// Checks whether `d` and `e` share a cell of the triangle and, if so,
/// which triangle edge `de` avoids.
pub fn same_cell_triangle_test(triangle: &[PolylineEdge; 3], extra: &PolylineEdge) -> Result<TriangleTest> {
    let mut crossings = [0usize; 3];
    for (k, t) in triangle.iter().enumerate() {
        let pr = chain_contacts(&t.chain, &extra.chain).profile();
        if pr.touching_count > 0 || pr.has_overlap {
            return Err(Error::PreconditionViolated(format!("extra edge touches triangle edge {:?}", t.key())));
        }
        if pr.crossing_count > 1 {
            return Err(Error::PreconditionViolated(format!(
                "extra edge crosses triangle edge {:?} {} times",
                t.key(),
                pr.crossing_count
            )));
        }
        crossings[k] = pr.crossing_count;
    }
    let arr = build_arrangement(triangle)?;
    let d = &extra.chain[0];
    let e = &extra.chain[extra.chain.len() - 1];
    let (cd, ce) = match (locate_cell(&arr, d), locate_cell(&arr, e)) {
        (Ok(x), Ok(y)) => (x, y),
        _ => return Err(Error::PreconditionViolated("endpoints of the extra edge lie on the triangle".into())),
    };
    let applicable = cd == ce;
    let missed_edge = if applicable {
        let mut keys: Vec<(EdgeKey, usize)> = triangle.iter().zip(crossings).map(|(t, c)| (t.key(), c)).collect();
        keys.sort();
        keys.into_iter().find(|&(_, c)| c == 0).map(|(k, _)| k)
    } else {
        None
    };
    Ok(TriangleTest { applicable, missed_edge, crossings })
}

/// JSON dump of nodes, arcs with their faces, and faces with colors.
pub fn to_debug_json(a: &ArrangementGraph) -> serde_json::Value {
    serde_json::json!({
        "nodes": a.nodes,
        "arcs": a.arcs.iter().map(|arc| serde_json::json!({
            "edge": arc.edge,
            "from": arc.from,
            "to": arc.to,
            "left_face": arc.left,
            "right_face": arc.right,
        })).collect::<Vec<_>>(),
        "faces": a.faces.iter().map(|f| serde_json::json!({
            "id": f.id,
            "bounded": f.bounded,
            "boundary_walks": f.boundary.len(),
            "color": f.color,
        })).collect::<Vec<_>>(),
        "components": a.components,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::frac;

    fn p(x: i64, y: i64) -> Point {
        Point::int(x, y)
    }

    fn seg(u: usize, v: usize, a: Point, b: Point) -> PolylineEdge {
        PolylineEdge::new(u, v, vec![a, b])
    }

    fn triangle() -> [PolylineEdge; 3] {
        [seg(0, 1, p(0, 0), p(6, 0)), seg(1, 2, p(6, 0), p(0, 6)), seg(0, 2, p(0, 0), p(0, 6))]
    }

    #[test]
    fn triangle_counts() {
        let a = build_arrangement(&triangle()).unwrap();
        assert_eq!((a.nodes.len(), a.arcs.len(), a.faces.len()), (3, 3, 2));
        assert!(a.euler_holds());
    }

    #[test]
    fn two_crossing_segments() {
        let a = build_arrangement(&[seg(0, 1, p(0, 0), p(2, 2)), seg(2, 3, p(0, 2), p(2, 0))]).unwrap();
        assert_eq!((a.nodes.len(), a.arcs.len(), a.faces.len()), (5, 4, 1));
        assert!(a.euler_holds());
    }

    #[test]
    fn nested_components_find_their_faces() {
        let mut edges = triangle().to_vec();
        edges.push(seg(3, 4, p(1, 1), p(2, 1)));
        edges.push(seg(5, 6, p(20, 20), p(21, 21)));
        let a = build_arrangement(&edges).unwrap();
        assert_eq!(a.components, 3);
        assert!(a.euler_holds());
        let inner = locate_cell(&a, &Point::new(frac(3, 2), frac(2, 1))).unwrap();
        let short = a.arcs.iter().find(|x| x.edge == 3).unwrap();
        assert_eq!(short.left, inner);
        assert_eq!(short.right, inner);
    }

    #[test]
    fn coloring_of_triangle() {
        let a = chessboard_coloring(&build_arrangement(&triangle()).unwrap()).unwrap();
        let inner = a.faces.iter().find(|f| f.bounded).unwrap();
        assert_eq!(inner.color, Some(Color::Black));
        assert_eq!(a.faces[a.outer].color, Some(Color::White));
    }

    #[test]
    fn open_segment_is_not_colorable() {
        let a = build_arrangement(&[seg(0, 1, p(0, 0), p(1, 0))]).unwrap();
        assert!(matches!(chessboard_coloring(&a), Err(Error::NotTwoColorable)));
    }

    #[test]
    fn locate_inside_outside_and_boundary() {
        let a = build_arrangement(&triangle()).unwrap();
        let inner = a.faces.iter().find(|f| f.bounded).unwrap().id;
        assert_eq!(locate_cell(&a, &p(2, 2)).unwrap(), inner);
        assert_eq!(locate_cell(&a, &p(1_000_000, 1_000_000)).unwrap(), a.outer);
        assert!(matches!(locate_cell(&a, &p(3, 0)), Err(Error::OnBoundary(_))));
    }

    #[test]
    fn contour_of_triangle_cell() {
        let a = build_arrangement(&triangle()).unwrap();
        let inner = a.faces.iter().find(|f| f.bounded).unwrap().id;
        let c = contour(&a, inner).unwrap();
        let mut pts = c.points.clone();
        pts.sort();
        assert_eq!(pts, vec![p(0, 0), p(0, 6), p(6, 0)]);
        assert!(matches!(contour(&a, a.outer), Err(Error::UnboundedCell)));
    }

    #[test]
    fn contour_drops_dangling_arc() {
        let mut edges = triangle().to_vec();
        edges.push(seg(0, 3, p(0, 0), p(1, 1)));
        let a = build_arrangement(&edges).unwrap();
        let inner = locate_cell(&a, &p(2, 2)).unwrap();
        let c = contour(&a, inner).unwrap();
        assert_eq!(c.points.len(), 3);
        assert!(c.contains(&p(2, 2)));
    }

    #[test]
    fn triangle_test_inside_edge() {
        let de = seg(3, 4, p(1, 1), p(2, 1));
        let r = same_cell_triangle_test(&triangle(), &de).unwrap();
        assert!(r.applicable);
        assert_eq!(r.missed_edge, Some((0, 1)));
        let out = seg(3, 4, p(1, 1), p(9, 9));
        let r = same_cell_triangle_test(&triangle(), &out).unwrap();
        assert!(!r.applicable);
    }
}
