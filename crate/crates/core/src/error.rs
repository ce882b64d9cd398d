use thiserror::Error;

/// Failures reported by the public API.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("operands live in different algebras: {0}")]
    ContextMismatch(String),
    #[error("precision exhausted: {0}")]
    Precision(String),
    #[error("series is not invertible: {0}")]
    NotInvertible(String),
    #[error("index out of range: {0}")]
    Inadmissible(String),
    #[error("invalid shift matrix: {0}")]
    InvalidShiftMatrix(String),
    #[error("malformed matrix series: {0}")]
    Malformed(String),
    #[error("loop degree {found} exceeds {bound}")]
    LoopDegreeOvershoot { found: u32, bound: u32 },
    #[error("the zero element has no leading term")]
    ZeroElement,
    #[error("identity fails: {0}")]
    IdentityMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
