use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::structures::StructureGraph;

/// Orders longer than this are not searched exhaustively by default.
pub const DEFAULT_LAYOUT_BOUND: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LayoutKind {
    /// No two edges interleave.
    Stack,
    /// No two edges nest.
    Queue,
}

impl FromStr for LayoutKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "stack" => Ok(LayoutKind::Stack),
            "queue" => Ok(LayoutKind::Queue),
            _ => Err(Error::Unsupported(format!("layout {s:?}"))),
        }
    }
}

/// Do edges with endpoint positions `(a, b)` and `(c, d)` conflict?
fn conflict(kind: LayoutKind, (a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    let ((a, b), (c, d)) = if a < c { ((a, b), (c, d)) } else { ((c, d), (a, b)) };
    match kind {
        LayoutKind::Stack => a < c && c < b && b < d,
        LayoutKind::Queue => a < c && d < b,
    }
}

fn span(pos: &[usize], (u, v): (usize, usize)) -> (usize, usize) {
    let (p, q) = (pos[u], pos[v]);
    (p.min(q), p.max(q))
}

/// `order[i]` is the vertex at position `i`.
pub fn layout_check(g: &StructureGraph, order: &[usize], kind: LayoutKind) -> bool {
    let mut pos = vec![usize::MAX; g.n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    if order.len() != g.n || pos.contains(&usize::MAX) {
        return false;
    }
    let spans: Vec<_> = g.edges.iter().map(|&e| span(&pos, e)).collect();
    spans.iter().enumerate().all(|(i, &s)| spans[i + 1..].iter().all(|&t| !conflict(kind, s, t)))
}

/// Lexicographically first vertex order passing `layout_check`, by
/// exhaustive search with pruning on completed edges.
pub fn layout_recognize(g: &StructureGraph, kind: LayoutKind, bound: usize) -> Result<Option<Vec<usize>>> {
    if g.n > bound {
        return Err(Error::BudgetExceeded(bound as u64));
    }
    let adj = g.adjacency();
    let mut pos = vec![usize::MAX; g.n];
    let mut order = Vec::with_capacity(g.n);
    let mut placed: Vec<(usize, usize)> = Vec::new();
    Ok(place(g, &adj, kind, &mut pos, &mut order, &mut placed).then_some(order))
}

fn place(
    g: &StructureGraph,
    adj: &[Vec<usize>],
    kind: LayoutKind,
    pos: &mut Vec<usize>,
    order: &mut Vec<usize>,
    placed: &mut Vec<(usize, usize)>,
) -> bool {
    if order.len() == g.n {
        return true;
    }
    let here = order.len();
    for v in 0..g.n {
        if pos[v] != usize::MAX {
            continue;
        }
        pos[v] = here;
        let fresh: Vec<(usize, usize)> =
            adj[v].iter().filter(|&&w| pos[w] != usize::MAX && w != v).map(|&w| (pos[w], here)).collect();
        let ok = fresh
            .iter()
            .enumerate()
            .all(|(i, &s)| placed.iter().chain(&fresh[i + 1..]).all(|&t| !conflict(kind, s, t)));
        if ok {
            let keep = placed.len();
            placed.extend(fresh);
            order.push(v);
            if place(g, adj, kind, pos, order, placed) {
                return true;
            }
            order.pop();
            placed.truncate(keep);
        }
        pos[v] = usize::MAX;
    }
    false
}
