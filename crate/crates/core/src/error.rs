use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: self-loop on vertex {label:?}")]
    SelfLoop { line: usize, label: String },

    #[error("graph has no edges")]
    EmptyGraph,

    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),

    #[error("graph has {components} components; a connected graph is required")]
    Disconnected { components: usize },

    #[error("alpha must lie in (0, 1], got {0}")]
    AlphaOutOfRange(f64),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error(
        "no convergence after {iterations} iterations (bracket [{lambda_min:.12e}, {lambda_max:.12e}])"
    )]
    NotConverged {
        iterations: usize,
        lambda_min: f64,
        lambda_max: f64,
    },

    #[error("iterate component {index} became non-positive ({value:e})")]
    NonPositiveIterate { index: usize, value: f64 },

    #[error("graph with {n} vertices exceeds the limit of {limit} for this computation")]
    TooLarge { n: usize, limit: usize },

    #[error("eigensolver failed: {0}")]
    Eigen(String),

    #[error("correlation undefined: {0}")]
    UndefinedCorrelation(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Whether the failure is numerical (iteration budget, eigensolver) rather
    /// than a problem with the input data.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NotConverged { .. } | Error::Eigen(_) | Error::NonPositiveIterate { .. }
        )
    }
}
