use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),

    #[error("line {line}: {message}")]
    PolygonSyntax { line: usize, message: String },

    #[error("point ({x}, {y}) is not strictly inside the body")]
    NotInterior { x: f64, y: f64 },

    #[error("point {0:?} is not strictly inside the standard simplex")]
    OutsideSimplex(Vec<f64>),

    #[error("origin is not strictly inside the body")]
    OriginNotInterior,

    #[error("direction vector must be nonzero and finite")]
    ZeroDirection,

    #[error("expected dimension {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("invalid bound table: {0}")]
    InvalidTable(String),

    #[error("affine map exceeds 1 in modulus on the simplex (value {0} at a vertex)")]
    TransplantOutOfRange(f64),

    #[error("|p(x)| = {value} reaches the sup-norm {norm}; the Bernstein ratio is undefined")]
    RatioUndefined { value: f64, norm: f64 },

    #[error("invariant violated: {0}")]
    InvariantViolated(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
