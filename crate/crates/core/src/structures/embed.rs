use serde::Serialize;

use crate::classify::DisjointnessSource;
use crate::error::{Error, Result};
use crate::generators::TypeKind;
use crate::geometry::{key, EdgeKey};

use super::graph::StructureGraph;
use super::recognize::{recognize_structure, Caterpillar, Recognition, SquidCertificate};

fn squid_sequence(c: &SquidCertificate, kind: TypeKind) -> Vec<usize> {
    let mut s = Vec::new();
    match kind {
        TypeKind::I => {
            s.extend(&c.u);
            s.extend([c.a, c.b, c.c]);
            s.extend(&c.w);
        }
        TypeKind::II => {
            s.push(c.a);
            s.extend(&c.w);
            s.push(c.b);
            s.extend(&c.u);
            s.push(c.c);
        }
        TypeKind::III => {
            s.push(c.a);
            s.extend(&c.w);
            s.extend([c.c, c.b]);
            s.extend(&c.u);
        }
    }
    s.extend(&c.isolated);
    s
}

/// `u_1, w^1, u_2, w^2, ...`
fn separated(c: &Caterpillar) -> Vec<usize> {
    c.path.iter().zip(&c.leaves).flat_map(|(&u, w)| std::iter::once(u).chain(w.iter().copied())).collect()
}

/// Left and right halves for the interleaved order: path vertices alternate
/// sides and each leaf group sits on the opposite side next to the path
/// edges of its hub, so every two independent edges run left to right in the
/// same relative order.
fn interleaved(c: &Caterpillar) -> (Vec<usize>, Vec<usize>) {
    let (mut l, mut r) = (Vec::new(), Vec::new());
    for (p, (&u, w)) in c.path.iter().zip(&c.leaves).enumerate() {
        let (own, other) = if p % 2 == 0 { (&mut l, &mut r) } else { (&mut r, &mut l) };
        own.push(u);
        other.extend(w);
    }
    (l, r)
}

/// Zig-zag order `u_1, u_3, ..., u_t, ..., u_4, u_2` with each leaf group
/// placed between its two path neighbors. Split after the turn.
fn nested(c: &Caterpillar) -> (Vec<usize>, Vec<usize>) {
    let t = c.path.len();
    // 0-based path positions in zig-zag order.
    let mut order: Vec<usize> = (0..t - 1).filter(|p| p % 2 == 0).collect();
    order.push(t - 1);
    order.extend((0..t - 1).rev().filter(|p| p % 2 == 1));
    // Leaf group of u_i (1-based) sits next to whichever of u_{i-1}, u_{i+1}
    // comes first, or next to u_t for the last group when t is odd.
    let group_after = |p: usize| -> usize {
        match p {
            _ if t == 1 => 0,
            _ if p == t - 1 && t % 2 == 1 => t - 1,
            _ if p % 2 == 0 => p + 1,
            _ => p - 1,
        }
    };
    let split_at = |seq_len: usize, p: usize| (p == t - 1).then_some(seq_len + usize::from(t % 2 == 1));
    let mut seq = Vec::new();
    let mut split = None;
    for &p in &order {
        if let Some(s) = split_at(seq.len(), p) {
            split = Some(s);
        }
        seq.push(c.path[p]);
        seq.extend(&c.leaves[group_after(p)]);
    }
    let r = seq.split_off(split.expect("the last path vertex is visited"));
    (seq, r)
}

fn caterpillar_sequence(cats: &[Caterpillar], isolated: &[usize], kind: TypeKind) -> Vec<usize> {
    let mut s = Vec::new();
    match kind {
        TypeKind::I => cats.iter().for_each(|c| s.extend(separated(c))),
        TypeKind::II => {
            let halves: Vec<_> = cats.iter().map(interleaved).collect();
            halves.iter().for_each(|(l, _)| s.extend(l));
            halves.iter().for_each(|(_, r)| s.extend(r));
        }
        TypeKind::III => {
            let halves: Vec<_> = cats.iter().map(nested).collect();
            halves.iter().for_each(|(l, _)| s.extend(l));
            halves.iter().rev().for_each(|(_, r)| s.extend(r));
        }
    }
    s.extend(isolated);
    s
}

/// Vertex order such that placing `seq[i]` on vertex `i` of any drawing of the
/// given type draws `g` without crossings.
pub fn embed_structure(g: &StructureGraph, kind: TypeKind) -> Result<Vec<usize>> {
    match recognize_structure(g) {
        Recognition::SquidPlusIsolated(c) => Ok(squid_sequence(&c, kind)),
        Recognition::CaterpillarForest { components, isolated } => {
            Ok(caterpillar_sequence(&components, &isolated, kind))
        }
        Recognition::Neither(_) => Err(Error::NotRecognized),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingCheck {
    pub ok: bool,
    /// Structure edges whose images are not disjoint.
    pub witness: Option<(EdgeKey, EdgeKey)>,
}

/// Maps `seq[i]` to vertex `i` of `src` and checks that every two
/// vertex-disjoint edges of `g` land on disjoint edges.
pub fn verify_plane_embedding<S: DisjointnessSource + ?Sized>(
    g: &StructureGraph,
    seq: &[usize],
    src: &S,
) -> Result<EmbeddingCheck> {
    let mut pos = vec![usize::MAX; g.n];
    for (i, &v) in seq.iter().enumerate() {
        if v >= g.n || pos[v] != usize::MAX {
            return Err(Error::PreconditionViolated(format!("sequence is not a permutation at {v}")));
        }
        pos[v] = i;
    }
    if seq.len() != g.n || g.n > src.vertex_count() {
        return Err(Error::PreconditionViolated(format!(
            "sequence of {} vertices for a structure on {} and a drawing on {}",
            seq.len(),
            g.n,
            src.vertex_count()
        )));
    }
    for (i, &e) in g.edges.iter().enumerate() {
        for &f in &g.edges[i + 1..] {
            if e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1 {
                continue;
            }
            if !src.disjoint(key(pos[e.0], pos[e.1]), key(pos[f.0], pos[f.1])) {
                return Ok(EmbeddingCheck { ok: false, witness: Some((e, f)) });
            }
        }
    }
    Ok(EmbeddingCheck { ok: true, witness: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::oracle_type;

    fn check(g: &StructureGraph, kind: TypeKind) {
        let seq = embed_structure(g, kind).unwrap();
        let r = verify_plane_embedding(g, &seq, &oracle_type(g.n, kind)).unwrap();
        assert!(r.ok, "{kind} {g:?} {seq:?} {:?}", r.witness);
    }

    #[test]
    fn squid_type_one_order() {
        // a = 0, b = 1, c = 2, u = 3 4, w = 5
        let g = StructureGraph::squid(2, 1, 0);
        assert_eq!(embed_structure(&g, TypeKind::I).unwrap(), vec![3, 4, 0, 1, 2, 5]);
    }

    #[test]
    fn path_nested_order() {
        let g = StructureGraph::path(5);
        assert_eq!(embed_structure(&g, TypeKind::III).unwrap(), vec![0, 2, 4, 3, 1]);
    }

    #[test]
    fn spider_cannot_be_embedded() {
        assert!(matches!(embed_structure(&StructureGraph::spider3(), TypeKind::I), Err(Error::NotRecognized)));
    }

    #[test]
    fn paths_embed_in_all_types() {
        for n in 1..=9 {
            for kind in TypeKind::ALL {
                check(&StructureGraph::path(n), kind);
            }
        }
    }

    #[test]
    fn caterpillar_forest_embeds() {
        let a = StructureGraph::new(8, [(0, 1), (1, 2), (2, 3), (1, 4), (1, 5), (2, 6), (3, 7)]).unwrap();
        let b = StructureGraph::new(6, [(0, 1), (1, 2), (0, 3), (2, 4), (2, 5)]).unwrap();
        let g = a.union(&b).union(&StructureGraph::path(2)).union(&StructureGraph::new(1, []).unwrap());
        for kind in TypeKind::ALL {
            check(&g, kind);
        }
    }

    #[test]
    fn squids_embed() {
        for s in 0..=3 {
            for t in 0..=3 {
                for kind in TypeKind::ALL {
                    check(&StructureGraph::squid(s, t, 2), kind);
                }
            }
        }
    }

    #[test]
    fn wrong_type_is_caught() {
        let g = StructureGraph::path(4);
        let seq = embed_structure(&g, TypeKind::I).unwrap();
        let r = verify_plane_embedding(&g, &seq, &oracle_type(4, TypeKind::III)).unwrap();
        assert!(!r.ok);
    }
}
