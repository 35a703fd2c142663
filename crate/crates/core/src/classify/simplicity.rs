use serde::Serialize;

use crate::error::Result;
use crate::geometry::{crossing_matrix, CrossingMatrix, Drawing, EdgeKey, Mode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SimplicityViolation {
    AdjacentCross,
    SeparateMultiCross,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub violation: SimplicityViolation,
    pub pair: (EdgeKey, EdgeKey),
    pub crossings: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicityReport {
    pub adjacent_simple: bool,
    pub separate_simple: bool,
    pub simple: bool,
    /// First violating pair of each kind.
    pub witnesses: Vec<Witness>,
}

pub fn adjacent(e: EdgeKey, f: EdgeKey) -> bool {
    e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1
}

pub fn simplicity_of(m: &CrossingMatrix) -> SimplicityReport {
    let mut adj = None;
    let mut sep = None;
    for (e, f, p) in m.iter() {
        if adjacent(e, f) {
            if p.crossing_count > 0 && adj.is_none() {
                adj = Some(Witness {
                    violation: SimplicityViolation::AdjacentCross,
                    pair: (e, f),
                    crossings: p.crossing_count,
                });
            }
        } else if p.crossing_count > 1 && sep.is_none() {
            sep = Some(Witness {
                violation: SimplicityViolation::SeparateMultiCross,
                pair: (e, f),
                crossings: p.crossing_count,
            });
        }
        if adj.is_some() && sep.is_some() {
            break;
        }
    }
    let adjacent_simple = adj.is_none();
    let separate_simple = sep.is_none();
    SimplicityReport {
        adjacent_simple,
        separate_simple,
        simple: adjacent_simple && separate_simple,
        witnesses: adj.into_iter().chain(sep).collect(),
    }
}

/// Requires the mild assumptions; violations surface as errors.
pub fn simplicity(d: &Drawing) -> Result<SimplicityReport> {
    Ok(simplicity_of(&crossing_matrix(d, Mode::Strict)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_convex, gen_flower, gen_twisted};

    #[test]
    fn convex_is_simple() {
        let r = simplicity(&gen_convex(5)).unwrap();
        assert!(r.simple && r.witnesses.is_empty());
        assert!(simplicity(&gen_twisted(5)).unwrap().simple);
    }

    #[test]
    fn flower_is_neither() {
        let r = simplicity(&gen_flower(6).unwrap()).unwrap();
        assert!(!r.adjacent_simple && !r.separate_simple && !r.simple);
        assert_eq!(r.witnesses.len(), 2);
    }
}
