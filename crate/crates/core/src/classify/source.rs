use crate::generators::DisjointnessOracle;
use crate::geometry::{key, CrossingMatrix, EdgeKey};

/// Anything that can say whether two edges of a complete graph are disjoint.
pub trait DisjointnessSource {
    /// Number of vertices.
    fn vertex_count(&self) -> usize;

    /// Edge keys in sorted order.
    fn edge_keys(&self) -> Vec<EdgeKey>;

    fn disjoint(&self, e: EdgeKey, f: EdgeKey) -> bool;
}

impl DisjointnessSource for DisjointnessOracle {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn edge_keys(&self) -> Vec<EdgeKey> {
        (0..self.n).flat_map(|i| (i + 1..self.n).map(move |j| (i, j))).collect()
    }

    fn disjoint(&self, e: EdgeKey, f: EdgeKey) -> bool {
        self.query(e, f)
    }
}

impl DisjointnessSource for CrossingMatrix {
    fn vertex_count(&self) -> usize {
        self.keys.iter().map(|&(_, v)| v + 1).max().unwrap_or(0)
    }

    fn edge_keys(&self) -> Vec<EdgeKey> {
        self.keys.clone()
    }

    fn disjoint(&self, e: EdgeKey, f: EdgeKey) -> bool {
        self.between(key(e.0, e.1), key(f.0, f.1)).is_some_and(|p| p.disjoint)
    }
}
