use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::geometry::EdgeKey;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TypeKind {
    I,
    II,
    III,
}

impl TypeKind {
    pub const ALL: [TypeKind; 3] = [TypeKind::I, TypeKind::II, TypeKind::III];

    /// The matching pair of `i < j < k < l` that this kind leaves disjoint.
    pub fn disjoint_pair(self, [i, j, k, l]: [usize; 4]) -> (EdgeKey, EdgeKey) {
        match self {
            TypeKind::I => ((i, j), (k, l)),
            TypeKind::II => ((i, k), (j, l)),
            TypeKind::III => ((i, l), (j, k)),
        }
    }
}

impl fmt::Display for TypeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TypeKind::I => "I",
            TypeKind::II => "II",
            TypeKind::III => "III",
        })
    }
}

impl FromStr for TypeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "I" | "1" => Ok(TypeKind::I),
            "II" | "2" => Ok(TypeKind::II),
            "III" | "3" => Ok(TypeKind::III),
            _ => Err(Error::Unsupported(format!("type {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OracleKind {
    Type(TypeKind),
    Convex,
    Twisted,
}

/// Answers "are these two edges disjoint?" for a combinatorially defined
/// drawing of the complete graph on `0..n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DisjointnessOracle {
    pub n: usize,
    pub kind: OracleKind,
}

pub fn oracle_type(n: usize, kind: TypeKind) -> DisjointnessOracle {
    DisjointnessOracle { n, kind: OracleKind::Type(kind) }
}

impl DisjointnessOracle {
    pub fn convex(n: usize) -> Self {
        DisjointnessOracle { n, kind: OracleKind::Convex }
    }

    pub fn twisted(n: usize) -> Self {
        DisjointnessOracle { n, kind: OracleKind::Twisted }
    }

    pub fn query(&self, e: EdgeKey, f: EdgeKey) -> bool {
        let (a, b) = crate::geometry::key(e.0, e.1);
        let (c, d) = crate::geometry::key(f.0, f.1);
        if a == c || a == d || b == c || b == d {
            return false;
        }
        let ((_, b), (c, d)) = if a < c { ((a, b), (c, d)) } else { ((c, d), (a, b)) };
        let separated = b < c;
        let nested = d < b;
        let interleaved = !separated && !nested;
        match self.kind {
            OracleKind::Type(TypeKind::I) => separated,
            OracleKind::Type(TypeKind::II) => interleaved,
            OracleKind::Type(TypeKind::III) => nested,
            OracleKind::Convex => !interleaved,
            OracleKind::Twisted => !nested,
        }
    }

    /// Whether the two edges cross, for the simple kinds. Type oracles only
    /// speak about disjointness, so they answer `None`.
    pub fn crosses(&self, e: EdgeKey, f: EdgeKey) -> Option<bool> {
        let shared = e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1;
        match self.kind {
            OracleKind::Convex | OracleKind::Twisted => Some(!shared && !self.query(e, f)),
            OracleKind::Type(_) => None,
        }
    }
}
