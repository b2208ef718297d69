use alloc::string::String;

/// Errors raised by the exact kernel.
///
/// `Inconsistency` is special: it is returned when two routes that must agree
/// by theorem (for example rank and pole counting) disagree. It always
/// indicates a bug and callers should never downgrade it to a warning.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix has non-integer entries")]
    NonIntegral,
    #[error("matrix is singular")]
    Singular,
    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("a vertex cannot be paired with itself ({0})")]
    RepeatedVertex(usize),
    #[error("input of size {size} exceeds the configured bound {bound}")]
    TooLarge { size: usize, bound: usize },
    #[error("path length must be at least 1")]
    EmptyPath,
    #[error("edge {0}-{1} is not in the expected state for this operation")]
    EdgeMismatch(usize, usize),
    #[error("pair is not controllable")]
    NotControllable,
    #[error("pairs are not isomorphic")]
    NotIsomorphic,
    #[error("graphs are not cospectral")]
    NotCospectral,
    #[error("vertices {0} and {1} are not cospectral")]
    VerticesNotCospectral(usize, usize),
    #[error("operation needs a vertex subset, not a general vector")]
    NotASubset,
    #[error("sequence too short: need {needed}, got {got}")]
    TooShort { needed: usize, got: usize },
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
}

pub type Result<T> = core::result::Result<T, Error>;
