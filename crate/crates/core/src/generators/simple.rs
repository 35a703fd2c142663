//! Convex and twisted drawings of the complete graph.

use crate::geometry::{Drawing, Point, PolylineEdge};

/// Straight-line drawing on `(i, i^2)`, which lists the points in convex
/// position in hull order.
pub fn gen_convex(n: usize) -> Drawing {
    let verts = (0..n as i64).map(|i| Point::int(i, i * i)).collect();
    Drawing::straight_complete(verts).expect("parabola points are distinct")
}

/// Octagon directions, counterclockwise from east.
const OCTAGON: [(i64, i64); 8] = [(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)];

/// Vertex `i` sits at `(8(i+1), 0)`. Edge `ab` winds once around the origin
/// counterclockwise, its radius growing linearly from `a` to `b` along the
/// eight octagon rays. Inside one cone between consecutive rays two edges
/// cross exactly when their radial order flips, so edges `ab` and `cd`
/// cross iff `a < c` and `d < b`.
pub fn gen_twisted(n: usize) -> Drawing {
    let verts: Vec<Point> = (0..n as i64).map(|i| Point::int(8 * (i + 1), 0)).collect();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let base = 8 * (a as i64 + 1);
            let step = (b - a) as i64;
            let chain = (0..=8)
                .map(|k| {
                    let r = base + step * k as i64;
                    let (ux, uy) = OCTAGON[k % 8];
                    Point::int(r * ux, r * uy)
                })
                .collect();
            edges.push(PolylineEdge::new(a, b, chain));
        }
    }
    Drawing::new(verts, edges).expect("spiral edges are well formed")
}
