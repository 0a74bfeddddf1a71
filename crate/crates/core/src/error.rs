use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A documented precondition was not met by the caller.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// A concentration input of zero makes the requested bound meaningless.
    #[error("vacuous bound: {0}")]
    VacuousBound(String),

    #[error("degenerate concentration: {0}")]
    DegenerateConcentration(String),

    #[error(
        "truncation depth m = {m} is insufficient: 2 c_m |f|_inf = {gap} >= epsilon = {epsilon}; raise m"
    )]
    TruncationDepthInsufficient { m: usize, gap: f64, epsilon: f64 },

    #[error("singular Möbius map: |beta x + 1| = {0}")]
    SingularMap(f64),

    #[error("malformed complex: {0}")]
    MalformedComplex(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
}

/// Fails with [`Error::Contract`] unless `cond` holds.
macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        {
            let holds: bool = $cond;
            if !holds {
                return Err($crate::error::Error::Contract(format!($($fmt)+)));
            }
        }
    };
}
pub(crate) use ensure;
