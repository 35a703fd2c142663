use crate::geometry::{EdgeKey, MildReport, Point};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid drawing: {0}")]
    InvalidDrawing(String),
    #[error("edge {edge:?} revisits {at:?}")]
    DegenerateChain { edge: EdgeKey, at: Box<Point> },
    #[error("mild assumptions violated ({} violations)", .0.violations.len())]
    MildAssumptions(MildReport),
    #[error("arrangement input contains a touching at {0:?}")]
    TouchingPresent(Box<Point>),
    #[error("face adjacency graph is not two-colorable")]
    NotTwoColorable,
    #[error("point {0:?} lies on the arrangement")]
    OnBoundary(Box<Point>),
    #[error("the unbounded cell has no contour")]
    UnboundedCell,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no disjoint matching pair among the four vertices")]
    NoPairFound,
    #[error("search budget of {0} exhausted")]
    BudgetExceeded(u64),
    #[error("flower radii are degenerate: {0}")]
    DegenerateRadii(String),
    #[error("structure is neither a squid with isolated vertices nor a caterpillar forest")]
    NotRecognized,
    #[error("quadruple {0:?} has no disjoint matching pair")]
    NoClass([usize; 4]),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("stroke condition {0} does not hold")]
    ConditionViolated(char),
    #[error("unsupported parameter: {0}")]
    Unsupported(String),
    #[error("malformed input: {0}")]
    Format(String),
}
