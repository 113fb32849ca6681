use thiserror::Error;

/// Errors for precondition violations across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameter m must be nonzero")]
    ZeroM,
    #[error("parameter n must be nonzero")]
    ZeroN,
    #[error("value must be nonzero")]
    ZeroValue,
    #[error("the zero polynomial is not admitted here")]
    ZeroPolynomial,
    #[error("polynomial degree must be at least 2")]
    LowDegree,
    #[error("lambda must be nonzero")]
    ZeroLambda,
    #[error("m and n must differ")]
    EqualParameters,
    #[error("y must be nonzero")]
    ZeroY,
    #[error("factorization overflow: composite cofactor exceeds 128 bits")]
    FactorTooLarge,
    #[error("invalid solution: {0}")]
    InvalidSolution(String),
}

pub type Result<T> = std::result::Result<T, Error>;
