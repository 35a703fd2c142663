//! Mutable stroke chains used while redrawing. Unlike a `Drawing`, a chain
//! here may pass through the same point twice.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::error::Result;
use crate::geometry::profile::Dir;
use crate::geometry::{dist2, on_segment, Coord, Drawing, EdgeKey, Point, PolylineEdge};

#[derive(Clone, Debug)]
pub(crate) struct Family {
    pub vertices: Vec<Point>,
    pub keys: Vec<EdgeKey>,
    pub chains: Vec<Vec<Point>>,
}

/// One visit of a stroke to a point: the chain index of the visit and the
/// directions towards the previous and next chain points.
#[derive(Clone, Debug)]
pub(crate) struct Passage {
    pub stroke: usize,
    pub idx: usize,
    pub prev: Option<Dir>,
    pub next: Option<Dir>,
}

impl Passage {
    pub fn rays(&self) -> impl Iterator<Item = &Dir> {
        self.prev.iter().chain(self.next.iter())
    }

    /// Does the stroke go through the point rather than end there?
    pub fn through(&self) -> bool {
        self.prev.is_some() && self.next.is_some()
    }
}

impl Family {
    pub fn from_drawing(d: &Drawing) -> Self {
        Family {
            vertices: d.vertices.clone(),
            keys: d.edges.iter().map(|e| e.key()).collect(),
            chains: d.edges.iter().map(|e| e.chain.clone()).collect(),
        }
    }

    pub fn to_drawing(&self) -> Result<Drawing> {
        let edges = self.keys.iter().zip(&self.chains).map(|(&(u, v), c)| PolylineEdge::new(u, v, c.clone())).collect();
        Drawing::new(self.vertices.clone(), edges)
    }

    pub fn adjacent(&self, s: usize, t: usize) -> bool {
        let (a, b) = (self.keys[s], self.keys[t]);
        s != t && (a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1)
    }

    pub fn is_vertex(&self, p: &Point) -> bool {
        self.vertices.contains(p)
    }

    /// Inserts `p` into every segment that has it strictly inside.
    pub fn subdivide(&mut self, p: &Point) {
        for chain in &mut self.chains {
            let mut out = Vec::with_capacity(chain.len() + 1);
            for (k, q) in chain.iter().enumerate() {
                if k > 0 {
                    let a = &chain[k - 1];
                    if a != p && q != p && on_segment(a, q, p) {
                        out.push(p.clone());
                    }
                }
                out.push(q.clone());
            }
            *chain = out;
        }
    }

    pub fn passages(&self, x: &Point) -> Vec<Passage> {
        let mut out = Vec::new();
        for (s, chain) in self.chains.iter().enumerate() {
            for (idx, p) in chain.iter().enumerate() {
                if p != x {
                    continue;
                }
                out.push(Passage {
                    stroke: s,
                    idx,
                    prev: (idx > 0).then(|| chain[idx - 1].sub(x)),
                    next: (idx + 1 < chain.len()).then(|| chain[idx + 1].sub(x)),
                });
            }
        }
        out
    }

    /// Squared distance from `x` to everything that does not touch it: other
    /// joints and vertices, and segments without `x` as an end.
    pub fn clearance2(&self, x: &Point) -> Option<Coord> {
        let mut best: Option<Coord> = None;
        let mut take = |d: Coord| {
            if best.as_ref().is_none_or(|b| &d < b) {
                best = Some(d);
            }
        };
        for p in self.vertices.iter().chain(self.chains.iter().flatten()) {
            if p != x {
                take(dist2(p, x));
            }
        }
        for chain in &self.chains {
            for w in chain.windows(2) {
                if &w[0] != x && &w[1] != x {
                    take(seg_dist2(x, &w[0], &w[1]));
                }
            }
        }
        best
    }
}

/// Squared distance from `p` to the segment `a b`.
pub(crate) fn seg_dist2(p: &Point, a: &Point, b: &Point) -> Coord {
    let (dx, dy) = b.sub(a);
    let len2 = &dx * &dx + &dy * &dy;
    let (px, py) = p.sub(a);
    let t = (&px * &dx + &py * &dy) / len2;
    let t = if t < Coord::zero() {
        Coord::zero()
    } else if t > Coord::one() {
        Coord::one()
    } else {
        t
    };
    dist2(p, &a.lerp(b, &t))
}

/// Largest power of two whose square is at most `bound` (positive).
pub(crate) fn dyadic_root_below(bound: &Coord) -> Coord {
    let two = Coord::from_integer(2.into());
    let mut r = Coord::one();
    while &r * &r > *bound {
        r /= &two;
    }
    while &(&r * &two) * &(&r * &two) <= *bound {
        r *= &two;
    }
    r
}

/// Max-norm of a direction.
pub(crate) fn max_norm(d: &Dir) -> Coord {
    let (a, b) = (num_traits::abs(d.0.clone()), num_traits::abs(d.1.clone()));
    if a.cmp(&b) == Ordering::Less {
        b
    } else {
        a
    }
}

/// The point at max-norm distance `rho` from `x` in direction `d`.
pub(crate) fn along(x: &Point, d: &Dir, rho: &Coord) -> Point {
    let s = rho / max_norm(d);
    Point::new(&x.x + &d.0 * &s, &x.y + &d.1 * &s)
}
