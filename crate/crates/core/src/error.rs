use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("state vector declares n = {declared} but carries {actual} amplitudes")]
    LengthMismatch { declared: usize, actual: usize },

    #[error("state vector is not normalized: squared norm {norm_sqr} (tolerance {tolerance:e})")]
    NotNormalized { norm_sqr: f64, tolerance: f64 },

    #[error("state vector has a zero norm and cannot be renormalized")]
    ZeroNorm,

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("parameter {name} = {value} is outside {range}")]
    ParameterOutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("dense matrix of dimension {n} exceeds the dense cap {cap}")]
    DenseCapExceeded { n: usize, cap: usize },

    #[error("sum of the non-target amplitudes vanishes; no member of the family amplifies component 0")]
    SumZero,

    #[error("marked index {marked} is out of range for dimension {n}")]
    MarkedOutOfRange { marked: usize, n: usize },

    #[error("predicate must mark exactly one basis state, found {0}")]
    MarkedCount(usize),

    #[error("invalid sign {0}: expected -1 or +1")]
    InvalidSign(String),

    #[error("sweep needs at least 2 points, got {0}")]
    TooFewPoints(usize),

    #[error("step budget must be at least 1, got {0}")]
    NoSteps(usize),

    #[error("{0}")]
    Io(String),

    #[error(transparent)]
    Json(#[from] JsonError),
}

/// Wrapper so `Error` can stay `Clone + PartialEq`.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("{0}")]
pub struct JsonError(pub String);

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(JsonError(e.to_string()))
    }
}
