use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the unit monomial 1 cannot be a generator")]
    UnitGenerator,
    #[error("operation requires a square-free monomial ideal")]
    SquareFreeRequired,
    #[error("resource limit exceeded: {what} (limit {limit}); raise it via EDGEIDEAL_LIMITS")]
    ResourceExceeded { what: &'static str, limit: usize },
    #[error("Sperner violation: edge {0:?} is contained in edge {1:?}")]
    SpernerViolation(Vec<usize>, Vec<usize>),
    #[error("edges must be nonempty")]
    EmptyEdge,
    #[error("operation requires a graph (all edges of size 2)")]
    GraphRequired,
    #[error("graph does not have the required shape: {0}")]
    ShapeMismatch(String),
    #[error("value {value} outside the allowed range {min}..={max}")]
    RangeError { value: i64, min: i64, max: i64 },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("ring mismatch: {0} variables vs {1}")]
    VariableMismatch(usize, usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Returns `ResourceExceeded` when `value > limit`.
pub(crate) fn guard(what: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        Err(Error::ResourceExceeded { what, limit })
    } else {
        Ok(())
    }
}
