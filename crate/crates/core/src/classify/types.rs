use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::{flower_witness, TypeKind};
use crate::geometry::{crossing_matrix, Drawing, EdgeKey, Mode};

use super::simplicity::simplicity_of;
use super::source::DisjointnessSource;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeReport {
    pub ok: bool,
    /// Vertices of the first failing quadruple, in sequence order.
    pub witness: Option<[usize; 4]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlowerReport {
    pub ok: bool,
    pub witness: Option<(EdgeKey, EdgeKey)>,
}

/// The three perfect matchings of `w`, in the classing priority order.
pub fn matchings(w: [usize; 4]) -> [(EdgeKey, EdgeKey); 3] {
    let k = crate::geometry::key;
    [(k(w[0], w[1]), k(w[2], w[3])), (k(w[0], w[2]), k(w[1], w[3])), (k(w[0], w[3]), k(w[1], w[2]))]
}

fn kind_index(kind: TypeKind) -> usize {
    match kind {
        TypeKind::I => 0,
        TypeKind::II => 1,
        TypeKind::III => 2,
    }
}

/// Checks that along `order` every quadruple has exactly the matching pair
/// of `kind` disjoint and the other two not.
pub fn verify_type<S: DisjointnessSource + ?Sized>(src: &S, order: &[usize], kind: TypeKind) -> TypeReport {
    let n = order.len();
    let want = kind_index(kind);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    let w = [order[i], order[j], order[k], order[l]];
                    let good = matchings(w).iter().enumerate().all(|(t, &(e, f))| src.disjoint(e, f) == (t == want));
                    if !good {
                        return TypeReport { ok: false, witness: Some(w) };
                    }
                }
            }
        }
    }
    TypeReport { ok: true, witness: None }
}

/// Adjacent pairs must cross exactly once, the others once or twice.
/// Disjoint pairs are reported first when present.
pub fn verify_flower(d: &Drawing) -> Result<FlowerReport> {
    let m = crossing_matrix(d, Mode::Strict)?;
    let disjoint = m.iter().find(|(_, _, p)| p.disjoint).map(|(e, f, _)| (e, f));
    let witness = disjoint.or_else(|| flower_witness(d, &m));
    Ok(FlowerReport { ok: witness.is_none(), witness })
}

/// First disjoint matching pair among `(01|23)`, `(02|13)`, `(03|12)` in a
/// four-vertex adjacent-simple drawing.
pub fn find_disjoint_pair_k4(d: &Drawing) -> Result<(EdgeKey, EdgeKey)> {
    if d.n() != 4 || !d.is_complete() {
        return Err(Error::PreconditionViolated("expected a drawing of K4".into()));
    }
    let m = crossing_matrix(d, Mode::Strict)?;
    if !simplicity_of(&m).adjacent_simple {
        return Err(Error::PreconditionViolated("drawing is not adjacent-simple".into()));
    }
    matchings([0, 1, 2, 3]).into_iter().find(|&(e, f)| m.disjoint(e, f)).ok_or(Error::NoPairFound)
}
