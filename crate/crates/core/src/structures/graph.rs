use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{key, EdgeKey};

/// Optional role names attached to a structure's vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labels {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triangle: Option<[usize; 3]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub legs_a: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub legs_c: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub path: Vec<usize>,
}

/// Simple undirected graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureGraph {
    pub n: usize,
    pub edges: Vec<EdgeKey>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Labels>,
}

impl StructureGraph {
    /// Normalizes edges to `u < v`, sorted. Loops and repeated edges are errors.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(Error::InvalidDrawing(format!("bad structure edge ({u}, {v})")));
            }
            if !set.insert(key(u, v)) {
                return Err(Error::InvalidDrawing(format!("repeated structure edge ({u}, {v})")));
            }
        }
        Ok(StructureGraph { n, edges: set.into_iter().collect(), labels: None })
    }

    pub fn with_labels(mut self, labels: Labels) -> Self {
        self.labels = Some(labels);
        self
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in adj.iter_mut() {
            a.sort_unstable();
        }
        adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&key(u, v)).is_ok()
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    pub fn complete(n: usize) -> Self {
        Self::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).expect("complete graph is simple")
    }

    pub fn cycle(n: usize) -> Self {
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    /// Center 0 with three legs `0-1-2`, `0-3-4`, `0-5-6`.
    pub fn spider3() -> Self {
        Self::new(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).expect("spider is simple")
    }

    /// Triangle `a=0, b=1, c=2` with `s` pendants on `a`, `t` pendants on
    /// `c`, and `isolated` extra vertices.
    pub fn squid(s: usize, t: usize, isolated: usize) -> Self {
        let mut edges = vec![(0, 1), (1, 2), (0, 2)];
        let legs_a: Vec<usize> = (3..3 + s).collect();
        let legs_c: Vec<usize> = (3 + s..3 + s + t).collect();
        edges.extend(legs_a.iter().map(|&u| (0, u)));
        edges.extend(legs_c.iter().map(|&w| (2, w)));
        Self::new(3 + s + t + isolated, edges).expect("squid is simple").with_labels(Labels {
            triangle: Some([0, 1, 2]),
            legs_a,
            legs_c,
            path: Vec::new(),
        })
    }

    /// Disjoint union, renumbering `other` after `self`. Labels are dropped.
    pub fn union(&self, other: &StructureGraph) -> Self {
        let off = self.n;
        let edges = self.edges.iter().copied().chain(other.edges.iter().map(|&(u, v)| (u + off, v + off)));
        Self::new(self.n + other.n, edges).expect("union of simple graphs")
    }
}
