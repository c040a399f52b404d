use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0} is not allowed")]
    Loop(usize),

    #[error("vertex {0} appears more than once in a vertex set")]
    DuplicateVertex(usize),

    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(usize),

    #[error("graph on {n} vertices exceeds the configured cap of {cap}")]
    TooManyVertices { n: usize, cap: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("matrix is not square: {rows} rows, row {row} has {len} entries")]
    NotSquare { rows: usize, row: usize, len: usize },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("division is not exact")]
    InexactDivision,

    #[error("divisor degree {divisor} exceeds dividend degree {dividend}")]
    DivisorDegree { dividend: usize, divisor: usize },

    #[error("polynomial has no real roots")]
    NoRealRoots,

    #[error("invalid interval: {0}")]
    InvalidInterval(String),

    #[error("least eigenvalue is below -1; not a principal submatrix of A(A+2I)")]
    LeastEigenvalueBelowMinusOne,

    #[error("graph is not cubic")]
    NotCubic,

    #[error("graph is not connected")]
    NotConnected,

    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
