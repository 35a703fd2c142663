use serde::Serialize;

use crate::classify::DisjointnessSource;
use crate::error::{Error, Result};
use crate::generators::{DisjointnessOracle, OracleKind, TypeKind};
use crate::geometry::{key, CrossingMatrix, EdgeKey};

use super::embed::embed_structure;
use super::graph::StructureGraph;
use super::ramsey::{classify_quadruple, monochromatic_subset_by, RamseyQuery};

/// Special vertices `w_1, w_2, ...` whose quadruples (in this order) all have
/// the disjoint matching of `kind`, sampled every `r`-th for the index family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub special: Vec<usize>,
    pub r: usize,
    pub kind: TypeKind,
}

impl Certificate {
    /// Every oracle is uniform along `0..n`: type oracles by their kind,
    /// convex and twisted ones with separated pairs disjoint.
    pub fn for_oracle(o: &DisjointnessOracle, r: usize) -> Self {
        let kind = match o.kind {
            OracleKind::Type(k) => k,
            OracleKind::Convex | OracleKind::Twisted => TypeKind::I,
        };
        Certificate { special: (0..o.n).collect(), r, kind }
    }
}

/// 1-based indices into the special vertices for `m` disjoint edges.
pub fn index_family(kind: TypeKind, r: usize, m: usize) -> Vec<(usize, usize)> {
    (1..=m)
        .map(|s| match kind {
            TypeKind::I => ((2 * s - 1) * r, 2 * s * r),
            TypeKind::II => (s * r, (s + m) * r),
            TypeKind::III => (s * r, (2 * m + 1 - s) * r),
        })
        .collect()
}

fn verify<S: DisjointnessSource + ?Sized>(src: &S, edges: &[EdgeKey]) -> Result<()> {
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            if !src.disjoint(e, f) {
                return Err(Error::VerificationFailed(format!("edges {e:?} and {f:?} are not disjoint")));
            }
        }
    }
    Ok(())
}

/// `m` pairwise disjoint edges picked by the index family of the certificate.
pub fn extract_disjoint_edges<S: DisjointnessSource + ?Sized>(
    src: &S,
    cert: &Certificate,
    m: usize,
) -> Result<Vec<EdgeKey>> {
    let need = 2 * m * cert.r;
    if cert.r == 0 || cert.special.len() < need {
        return Err(Error::PreconditionViolated(format!(
            "{m} edges with r = {} need {need} special vertices, got {}",
            cert.r,
            cert.special.len()
        )));
    }
    let w = |i: usize| cert.special[i - 1];
    let edges: Vec<EdgeKey> = index_family(cert.kind, cert.r, m).into_iter().map(|(a, b)| key(w(a), w(b))).collect();
    verify(src, &edges)?;
    Ok(edges)
}

/// Adjacent-simple route: find `2m` vertices with one quadruple class, then
/// place a perfect matching on them with that type's embedding order.
pub fn extract_from_drawing(mat: &CrossingMatrix, m: usize, budget: u64) -> Result<Vec<EdgeKey>> {
    let n = mat.vertex_count();
    let q = RamseyQuery { n, m: 2 * m, r: 4, budget };
    let subset = monochromatic_subset_by(q, |t| classify_quadruple(mat, [t[0], t[1], t[2], t[3]]))?
        .ok_or_else(|| Error::PreconditionViolated(format!("no {} vertices with a common quadruple class", 2 * m)))?;
    let kind = if subset.len() >= 4 {
        classify_quadruple(mat, [subset[0], subset[1], subset[2], subset[3]])?
    } else {
        TypeKind::I
    };
    let matching = StructureGraph::new(2 * m, (0..m).map(|i| (2 * i, 2 * i + 1)))?;
    let seq = embed_structure(&matching, kind)?;
    let mut at = vec![0; 2 * m];
    for (p, &v) in seq.iter().enumerate() {
        at[v] = subset[p];
    }
    let mut edges: Vec<EdgeKey> = (0..m).map(|i| key(at[2 * i], at[2 * i + 1])).collect();
    edges.sort_unstable();
    verify(mat, &edges)?;
    Ok(edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_convex, oracle_type};
    use crate::geometry::{crossing_matrix, Mode};

    #[test]
    fn separated_formula() {
        assert_eq!(index_family(TypeKind::I, 4, 2), vec![(4, 8), (12, 16)]);
        let cert = Certificate::for_oracle(&oracle_type(20, TypeKind::I), 4);
        assert_eq!(extract_disjoint_edges(&oracle_type(20, TypeKind::I), &cert, 2).unwrap(), vec![(3, 7), (11, 15)]);
    }

    #[test]
    fn every_type_oracle() {
        for kind in TypeKind::ALL {
            let o = oracle_type(24, kind);
            let edges = extract_disjoint_edges(&o, &Certificate::for_oracle(&o, 4), 3).unwrap();
            assert_eq!(edges.len(), 3);
        }
    }

    #[test]
    fn wrong_certificate_fails() {
        let o = oracle_type(12, TypeKind::III);
        let cert = Certificate { kind: TypeKind::I, ..Certificate::for_oracle(&o, 1) };
        assert!(matches!(extract_disjoint_edges(&o, &cert, 3), Err(Error::VerificationFailed(_))));
    }

    #[test]
    fn convex_drawing() {
        let mat = crossing_matrix(&gen_convex(6), Mode::Strict).unwrap();
        assert_eq!(extract_from_drawing(&mat, 3, 10_000).unwrap(), vec![(0, 1), (2, 3), (4, 5)]);
    }
}
