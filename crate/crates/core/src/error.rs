use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("dimension guard exceeded: {what} requires {limit}, got {got}")]
    SizeGuard {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("matrix is singular")]
    Singular,

    #[error("{0}")]
    InvalidArgument(String),

    #[error("operator is not Hermitian (residual {residual:.3e})")]
    NotHermitian { residual: f64 },

    #[error("operator has a significantly negative eigenvalue ({0:.3e})")]
    NotPsd(f64),

    #[error("permutation family is not mutually orthogonal: {0}")]
    NotOrthogonalFamily(String),

    #[error("channel is not trace preserving (residual {residual:.3e})")]
    NotTracePreserving { residual: f64 },

    #[error("invalid strategy: {0}")]
    InvalidStrategy(String),

    #[error("cycle cover extraction failed: {0}")]
    MatchingFailed(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("non-finite entry encountered in {0}")]
    NonFinite(&'static str),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
