use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::EdgeKey;

use super::simplicity::adjacent;
use super::source::DisjointnessSource;

/// Default cap on search nodes for exhaustive searches.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// Edges as nodes, disjoint pairs as links (ids into `edges`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DisjointnessGraph {
    pub edges: Vec<EdgeKey>,
    pub links: BTreeSet<(usize, usize)>,
}

impl DisjointnessGraph {
    pub fn link_keys(&self) -> Vec<(EdgeKey, EdgeKey)> {
        self.links.iter().map(|&(i, j)| (self.edges[i], self.edges[j])).collect()
    }

    pub fn linked(&self, i: usize, j: usize) -> bool {
        self.links.contains(&(i.min(j), i.max(j)))
    }
}

pub fn disjointness_graph<S: DisjointnessSource + ?Sized>(src: &S) -> DisjointnessGraph {
    let edges = src.edge_keys();
    let mut links = BTreeSet::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if !adjacent(edges[i], edges[j]) && src.disjoint(edges[i], edges[j]) {
                links.insert((i, j));
            }
        }
    }
    DisjointnessGraph { edges, links }
}

struct Search<'a> {
    adj: &'a [Vec<bool>],
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn grow(&mut self, current: &mut Vec<usize>, candidates: &[usize]) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        if current.len() > self.best.len() {
            self.best = current.clone();
        }
        for (k, &v) in candidates.iter().enumerate() {
            if current.len() + candidates.len() - k <= self.best.len() {
                return Ok(());
            }
            let next: Vec<usize> = candidates[k + 1..].iter().copied().filter(|&w| self.adj[v][w]).collect();
            current.push(v);
            self.grow(current, &next)?;
            current.pop();
        }
        Ok(())
    }
}

/// A largest set of pairwise disjoint edges. Among maximum sets the
/// lexicographically smallest by edge id is returned.
pub fn max_disjoint_set<S: DisjointnessSource + ?Sized>(src: &S, budget: u64) -> Result<Vec<EdgeKey>> {
    let g = disjointness_graph(src);
    let m = g.edges.len();
    let mut adj = vec![vec![false; m]; m];
    for &(i, j) in &g.links {
        adj[i][j] = true;
        adj[j][i] = true;
    }
    let mut s = Search { adj: &adj, best: Vec::new(), nodes: 0, budget };
    let all: Vec<usize> = (0..m).collect();
    s.grow(&mut Vec::new(), &all)?;
    Ok(s.best.into_iter().map(|i| g.edges[i]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_convex, gen_flower, oracle_type, TypeKind};
    use crate::geometry::{crossing_matrix, Mode};

    #[test]
    fn convex_four_links() {
        let m = crossing_matrix(&gen_convex(4), Mode::Strict).unwrap();
        let g = disjointness_graph(&m);
        assert_eq!(g.link_keys(), vec![((0, 1), (2, 3)), ((0, 3), (1, 2))]);
        assert_eq!(max_disjoint_set(&m, DEFAULT_BUDGET).unwrap().len(), 2);
    }

    #[test]
    fn flower_has_no_links() {
        let m = crossing_matrix(&gen_flower(6).unwrap(), Mode::Strict).unwrap();
        assert!(disjointness_graph(&m).links.is_empty());
        assert_eq!(max_disjoint_set(&m, DEFAULT_BUDGET).unwrap().len(), 1);
    }

    #[test]
    fn type_one_links_are_separated_pairs() {
        let g = disjointness_graph(&oracle_type(5, TypeKind::I));
        for (e, f) in g.link_keys() {
            assert!(e.1 < f.0, "{e:?} {f:?}");
        }
        assert_eq!(g.links.len(), 5);
    }

    #[test]
    fn type_two_six() {
        let s = max_disjoint_set(&oracle_type(6, TypeKind::II), DEFAULT_BUDGET).unwrap();
        assert_eq!(s, vec![(0, 3), (1, 4), (2, 5)]);
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(max_disjoint_set(&oracle_type(9, TypeKind::I), 3), Err(Error::BudgetExceeded(3))));
    }
}
