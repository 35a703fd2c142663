//! Geometric Type III drawings.
//!
//! Vertices sit on the x-axis, the spine. Every edge alternates between
//! arcs above and below the spine and crosses it at its own spine points.
//! Two arcs on the same side cross exactly when their spine intervals
//! interleave, so the whole crossing pattern is fixed by the order of the
//! spine points. The order used here is a certificate for `K_8` found by an
//! exhaustive search; every induced subgraph of a Type III drawing is again
//! Type III, so smaller `n` take the first `n` vertices.
//!
//! Arcs are integer trapezoids whose height grows with their span, which keeps
//! nested arcs apart and makes interleaved arcs cross once.

use crate::error::{Error, Result};
use crate::geometry::{Drawing, Point, PolylineEdge};

/// Largest supported vertex count.
pub const MAX_TYPE3: usize = 8;

/// Spine rank of each vertex.
const VERTEX_RANK: [i64; MAX_TYPE3] = [2, 11, 19, 44, 55, 71, 76, 90];

/// `(u, v, first arc below the spine, spine ranks of the interior crossings)`.
const EDGES: [(usize, usize, bool, [i64; 4]); 28] = [
    (0, 1, false, [54, 49, 23, 13]),
    (0, 2, false, [116, 3, 53, 50]),
    (0, 3, false, [112, 110, 109, 29]),
    (0, 4, false, [96, 31, 35, 56]),
    (0, 5, false, [93, 94, 95, 70]),
    (0, 6, false, [87, 88, 92, 82]),
    (0, 7, false, [84, 85, 86, 89]),
    (1, 2, false, [52, 51, 14, 15]),
    (1, 3, false, [12, 117, 113, 26]),
    (1, 4, true, [118, 101, 28, 36]),
    (1, 5, false, [10, 119, 99, 69]),
    (1, 6, false, [9, 0, 97, 81]),
    (1, 7, false, [8, 7, 4, 1]),
    (2, 3, false, [20, 25, 24, 22]),
    (2, 4, true, [103, 102, 27, 38]),
    (2, 5, false, [18, 111, 100, 68]),
    (2, 6, false, [17, 114, 98, 80]),
    (2, 7, false, [16, 6, 5, 115]),
    (3, 4, false, [58, 32, 34, 57]),
    (3, 5, false, [66, 106, 105, 67]),
    (3, 6, false, [63, 107, 104, 79]),
    (3, 7, false, [59, 60, 61, 108]),
    (4, 5, true, [48, 47, 40, 72]),
    (4, 6, false, [46, 42, 64, 78]),
    (4, 7, false, [45, 43, 62, 91]),
    (5, 6, true, [74, 37, 33, 75]),
    (5, 7, true, [73, 39, 30, 77]),
    (6, 7, true, [65, 41, 21, 83]),
];

/// Distance between consecutive spine ranks.
const UNIT: i64 = 8;
/// Horizontal run of each trapezoid leg.
const LEG: i64 = 2;

/// Joints of the arc from rank `r` to rank `s`, excluding the start point.
fn arc(r: i64, s: i64, below: bool) -> [(i64, i64); 3] {
    let (lo, hi) = (r.min(s), r.max(s));
    // Injective in (span, left end), so no two arcs share a top.
    let h = 4 * ((hi - lo) * 256 + lo + 1);
    let h = if below { -h } else { h };
    let (x0, x1) = (r * UNIT, s * UNIT);
    let dir = (x1 - x0).signum();
    [(x0 + dir * LEG, h), (x1 - dir * LEG, h), (x1, 0)]
}

fn edge_chain(u: usize, v: usize, below: bool, interior: &[i64; 4]) -> Vec<Point> {
    let mut ranks = vec![VERTEX_RANK[u]];
    ranks.extend_from_slice(interior);
    ranks.push(VERTEX_RANK[v]);
    let mut pts = vec![(ranks[0] * UNIT, 0)];
    for (k, w) in ranks.windows(2).enumerate() {
        pts.extend(arc(w[0], w[1], below ^ (k % 2 == 1)));
    }
    pts.into_iter().map(|(x, y)| Point::int(x, y)).collect()
}

/// A Type III drawing of `K_n` along the identity order.
pub fn gen_type3_geometric(n: usize) -> Result<Drawing> {
    if !(2..=MAX_TYPE3).contains(&n) {
        return Err(Error::Unsupported(format!("type III drawings are built for 2..={MAX_TYPE3} vertices")));
    }
    let vertices = VERTEX_RANK[..n].iter().map(|&r| Point::int(r * UNIT, 0)).collect();
    let edges = EDGES
        .iter()
        .filter(|e| e.1 < n)
        .map(|&(u, v, below, ref interior)| PolylineEdge::new(u, v, edge_chain(u, v, below, interior)))
        .collect();
    Drawing::new(vertices, edges)
}
