use std::collections::VecDeque;

use serde::Serialize;

use crate::geometry::EdgeKey;

use super::graph::StructureGraph;

/// Triangle `a, b, c` with pendants `u` on `a` and `w` on `c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquidCertificate {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub u: Vec<usize>,
    pub w: Vec<usize>,
    pub isolated: Vec<usize>,
}

/// Central path `u_1..u_t` and, per path vertex, its other neighbors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Caterpillar {
    pub path: Vec<usize>,
    pub leaves: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "obstruction", rename_all = "kebab-case")]
pub enum Obstruction {
    /// A cycle other than a single triangle.
    Cycle { vertices: Vec<usize> },
    /// Center with three legs of length two.
    Spider { center: usize, legs: [(usize, usize); 3] },
    /// An edge that does not fit the squid shape around the triangle.
    Edge { edge: EdgeKey },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Recognition {
    SquidPlusIsolated(SquidCertificate),
    CaterpillarForest { components: Vec<Caterpillar>, isolated: Vec<usize> },
    Neither(Obstruction),
}

fn components(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; adj.len()];
    let mut out = Vec::new();
    for s in 0..adj.len() {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            for &w in &adj[comp[i]] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Some cycle of the graph, found by BFS tree plus one non-tree edge.
fn find_cycle(adj: &[Vec<usize>], comp: &[usize]) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let root = comp[0];
    parent[root] = root;
    let mut q = VecDeque::from([root]);
    while let Some(v) = q.pop_front() {
        for &w in &adj[v] {
            if parent[w] == usize::MAX {
                parent[w] = v;
                depth[w] = depth[v] + 1;
                q.push_back(w);
            } else if w != parent[v] && parent[w] != v {
                let (mut x, mut y) = (v, w);
                let (mut left, mut right) = (vec![x], vec![y]);
                while x != y {
                    if depth[x] >= depth[y] {
                        x = parent[x];
                        left.push(x);
                    } else {
                        y = parent[y];
                        right.push(y);
                    }
                }
                right.pop();
                right.reverse();
                left.extend(right);
                return Some(left);
            }
        }
    }
    None
}

/// Longest path in a tree, from the smallest-id end.
fn diameter_path(adj: &[Vec<usize>], comp: &[usize]) -> Vec<usize> {
    let far = |s: usize| -> (usize, Vec<usize>) {
        let mut prev = vec![usize::MAX; adj.len()];
        prev[s] = s;
        let mut order = vec![s];
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            for &w in &adj[v] {
                if prev[w] == usize::MAX {
                    prev[w] = v;
                    order.push(w);
                }
            }
            i += 1;
        }
        let end = *order.last().expect("nonempty component");
        (end, prev)
    };
    let (x, _) = far(comp[0]);
    let (y, prev) = far(x);
    let mut path = vec![y];
    while *path.last().unwrap() != x {
        path.push(prev[*path.last().unwrap()]);
    }
    if path[0] > path[path.len() - 1] {
        path.reverse();
    }
    path
}

fn caterpillar(adj: &[Vec<usize>], comp: &[usize]) -> Result<Caterpillar, Obstruction> {
    let inner: Vec<usize> = comp.iter().copied().filter(|&v| adj[v].len() >= 2).collect();
    for &v in &inner {
        let heavy: Vec<usize> = adj[v].iter().copied().filter(|&w| adj[w].len() >= 2).collect();
        if heavy.len() >= 3 {
            let leg = |x: usize| (x, *adj[x].iter().find(|&&y| y != v).expect("degree at least two"));
            return Err(Obstruction::Spider { center: v, legs: [leg(heavy[0]), leg(heavy[1]), leg(heavy[2])] });
        }
    }
    let path = diameter_path(adj, comp);
    let on_path: std::collections::HashMap<usize, usize> = path.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut leaves = vec![Vec::new(); path.len()];
    for &v in comp {
        if on_path.contains_key(&v) {
            continue;
        }
        let hub = adj[v].iter().find_map(|w| on_path.get(w)).copied();
        match hub {
            Some(i) => leaves[i].push(v),
            None => unreachable!("a tree without a spider has every vertex next to its longest path"),
        }
    }
    Ok(Caterpillar { path, leaves })
}

fn squid(g: &StructureGraph, adj: &[Vec<usize>], comps: &[Vec<usize>], tri: Vec<usize>) -> Recognition {
    let isolated: Vec<usize> = comps.iter().filter(|c| c.len() == 1).map(|c| c[0]).collect();
    let tri_set = |v: usize| tri.contains(&v);
    if let Some(c) = comps.iter().find(|c| c.len() > 1 && !c.contains(&tri[0])) {
        let v = c[0];
        return Recognition::Neither(Obstruction::Edge { edge: crate::geometry::key(v, adj[v][0]) });
    }
    // Every non-triangle vertex must be a pendant on the triangle.
    for &(x, y) in &g.edges {
        if !tri_set(x) && !tri_set(y) {
            return Recognition::Neither(Obstruction::Edge { edge: (x, y) });
        }
    }
    let pendants: Vec<Vec<usize>> =
        tri.iter().map(|&t| adj[t].iter().copied().filter(|&w| !tri_set(w)).collect()).collect();
    for (i, p) in pendants.iter().enumerate() {
        for &w in p {
            if adj[w].len() != 1 {
                let other = *adj[w].iter().find(|&&z| z != tri[i]).expect("degree above one");
                return Recognition::Neither(Obstruction::Edge { edge: crate::geometry::key(w, other) });
            }
        }
    }
    let with: Vec<usize> = (0..3).filter(|&i| !pendants[i].is_empty()).collect();
    if with.len() == 3 {
        let (t, w) = (tri[2], pendants[2][0]);
        return Recognition::Neither(Obstruction::Edge { edge: crate::geometry::key(t, w) });
    }
    // Respect labels when they name a consistent (a, c) choice.
    let labelled = g.labels.as_ref().and_then(|l| l.triangle).filter(|t| {
        let mut s = *t;
        s.sort_unstable();
        s.to_vec() == tri && pendants[tri.iter().position(|&x| x == t[1]).unwrap()].is_empty()
    });
    let (ia, ib, ic) = match labelled {
        Some(t) => {
            let at = |v: usize| tri.iter().position(|&x| x == v).unwrap();
            (at(t[0]), at(t[1]), at(t[2]))
        }
        None => {
            let b = (0..3).find(|i| pendants[*i].is_empty()).expect("at most two triangle vertices carry pendants");
            let rest: Vec<usize> = (0..3).filter(|&i| i != b).collect();
            let (a, c) = if pendants[rest[0]].is_empty() && !pendants[rest[1]].is_empty() {
                (rest[1], rest[0])
            } else {
                (rest[0], rest[1])
            };
            (a, b, c)
        }
    };
    Recognition::SquidPlusIsolated(SquidCertificate {
        a: tri[ia],
        b: tri[ib],
        c: tri[ic],
        u: pendants[ia].clone(),
        w: pendants[ic].clone(),
        isolated,
    })
}

pub fn recognize_structure(g: &StructureGraph) -> Recognition {
    let adj = g.adjacency();
    let comps = components(&adj);
    let cyclomatic = g.edges.len() + comps.len() - g.n;
    if cyclomatic == 0 {
        let mut cats = Vec::new();
        let mut isolated = Vec::new();
        for c in &comps {
            if c.len() == 1 {
                isolated.push(c[0]);
                continue;
            }
            match caterpillar(&adj, c) {
                Ok(cat) => cats.push(cat),
                Err(ob) => return Recognition::Neither(ob),
            }
        }
        return Recognition::CaterpillarForest { components: cats, isolated };
    }
    let comp = comps
        .iter()
        .find(|c| c.len() > 1 && find_cycle(&adj, c).is_some())
        .expect("a graph with cycles has a cyclic component");
    let cycle = find_cycle(&adj, comp).expect("checked above");
    if cycle.len() != 3 || cyclomatic > 1 {
        let cycle = if cycle.len() == 3 { longer_cycle(&adj, g, &cycle).unwrap_or(cycle) } else { cycle };
        return Recognition::Neither(Obstruction::Cycle { vertices: cycle });
    }
    let mut tri = cycle;
    tri.sort_unstable();
    squid(g, &adj, &comps, tri)
}

/// With two independent cycles some cycle other than `tri` exists: drop one
/// triangle edge at a time and look again.
fn longer_cycle(adj: &[Vec<usize>], g: &StructureGraph, tri: &[usize]) -> Option<Vec<usize>> {
    for k in 0..3 {
        let (x, y) = (tri[k], tri[(k + 1) % 3]);
        let cut: Vec<Vec<usize>> = adj
            .iter()
            .enumerate()
            .map(|(v, ns)| ns.iter().copied().filter(|&w| !((v == x && w == y) || (v == y && w == x))).collect())
            .collect();
        for c in components(&cut) {
            if let Some(cy) = find_cycle(&cut, &c) {
                return Some(cy);
            }
        }
    }
    let _ = g;
    None
}
