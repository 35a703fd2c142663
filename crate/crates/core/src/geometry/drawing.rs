use std::collections::HashSet;

use crate::error::{Error, Result};

use super::point::Point;

/// Unordered vertex pair naming an edge, always stored with `u < v`.
pub type EdgeKey = (usize, usize);

pub fn key(u: usize, v: usize) -> EdgeKey {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolylineEdge {
    pub u: usize,
    pub v: usize,
    pub chain: Vec<Point>,
}

impl PolylineEdge {
    pub fn new(u: usize, v: usize, chain: Vec<Point>) -> Self {
        PolylineEdge { u, v, chain }
    }

    pub fn key(&self) -> EdgeKey {
        key(self.u, self.v)
    }

    pub fn segments(&self) -> impl Iterator<Item = (&Point, &Point)> {
        self.chain.windows(2).map(|w| (&w[0], &w[1]))
    }

    pub fn is_adjacent(&self, other: &PolylineEdge) -> bool {
        self.u == other.u || self.u == other.v || self.v == other.u || self.v == other.v
    }

    /// Same curve traversed from `v` to `u`.
    pub fn reversed(&self) -> PolylineEdge {
        let mut chain = self.chain.clone();
        chain.reverse();
        PolylineEdge::new(self.v, self.u, chain)
    }

    /// First repeated point of the chain, if any.
    pub fn repeated_point(&self) -> Option<&Point> {
        let mut seen = HashSet::with_capacity(self.chain.len());
        self.chain.iter().find(|p| !seen.insert(*p))
    }
}

/// Vertices plus polyline edges. Edges are kept with `u < v` and sorted by
/// `(u, v)`, so an edge id is a stable index into `edges`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Drawing {
    pub vertices: Vec<Point>,
    pub edges: Vec<PolylineEdge>,
}

impl Drawing {
    /// Validates the structural invariants and normalizes edge orientation
    /// and order.
    pub fn new(vertices: Vec<Point>, edges: Vec<PolylineEdge>) -> Result<Self> {
        let mut seen = HashSet::new();
        for (i, p) in vertices.iter().enumerate() {
            if !seen.insert(p) {
                return Err(Error::InvalidDrawing(format!("vertex {i} repeats point {p:?}")));
            }
        }
        let n = vertices.len();
        let mut out = Vec::with_capacity(edges.len());
        let mut keys = HashSet::new();
        for e in edges {
            if e.u >= n || e.v >= n || e.u == e.v {
                return Err(Error::InvalidDrawing(format!("bad endpoints ({}, {})", e.u, e.v)));
            }
            if !keys.insert(e.key()) {
                return Err(Error::InvalidDrawing(format!("duplicate edge {:?}", e.key())));
            }
            if e.chain.len() < 2 {
                return Err(Error::InvalidDrawing(format!("edge {:?} has fewer than two points", e.key())));
            }
            if e.chain[0] != vertices[e.u] || e.chain[e.chain.len() - 1] != vertices[e.v] {
                return Err(Error::InvalidDrawing(format!(
                    "edge {:?} does not start and end at its vertices",
                    e.key()
                )));
            }
            if e.chain.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidDrawing(format!("edge {:?} has a zero-length segment", e.key())));
            }
            out.push(if e.u < e.v { e } else { e.reversed() });
        }
        out.sort_by_key(|e| e.key());
        Ok(Drawing { vertices, edges: out })
    }

    /// Drawing with straight segments for the given vertex pairs.
    pub fn straight(vertices: Vec<Point>, pairs: &[EdgeKey]) -> Result<Self> {
        let edges = pairs
            .iter()
            .map(|&(u, v)| PolylineEdge::new(u, v, vec![vertices[u].clone(), vertices[v].clone()]))
            .collect();
        Drawing::new(vertices, edges)
    }

    /// Complete straight-line drawing on the given points.
    pub fn straight_complete(vertices: Vec<Point>) -> Result<Self> {
        let n = vertices.len();
        let pairs: Vec<EdgeKey> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Drawing::straight(vertices, &pairs)
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search_by_key(&key(u, v), |e| e.key()).ok()
    }

    pub fn edge(&self, u: usize, v: usize) -> Option<&PolylineEdge> {
        self.edge_id(u, v).map(|i| &self.edges[i])
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.edges.len() == n * n.saturating_sub(1) / 2
    }

    /// Sub-drawing on `verts`, renumbered so that `verts[i]` becomes vertex
    /// `i`. Edges between listed vertices are kept.
    pub fn induced(&self, verts: &[usize]) -> Drawing {
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let vertices = verts.iter().map(|&v| self.vertices[v].clone()).collect();
        let mut edges: Vec<PolylineEdge> = self
            .edges
            .iter()
            .filter(|e| pos[e.u] != usize::MAX && pos[e.v] != usize::MAX)
            .map(|e| {
                let ne = PolylineEdge::new(pos[e.u], pos[e.v], e.chain.clone());
                if ne.u < ne.v {
                    ne
                } else {
                    ne.reversed()
                }
            })
            .collect();
        edges.sort_by_key(|e| e.key());
        Drawing { vertices, edges }
    }
}
