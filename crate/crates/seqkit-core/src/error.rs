use thiserror::Error;

/// Errors raised by series and matrix constructions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series has zero constant term and is not invertible")]
    NotInvertible,

    #[error("composition requires the inner series to have zero constant term")]
    CompositionDomain,

    #[error("reversion requires f(0) = 0 and f'(0) != 0")]
    NoReversion,

    #[error("series must have valuation 1 (f(0) = 0, f'(0) != 0)")]
    NotValuationOne,

    #[error("base sequence has {have} terms, need at least {need}")]
    InsufficientTerms { have: usize, need: usize },

    #[error("truncation order {have} is too small, need at least {need}")]
    InsufficientOrder { have: usize, need: usize },

    #[error("given value is not a root of the polynomial")]
    NotARoot,

    #[error("polynomial has zero derivative at the root")]
    SingularDerivative,

    #[error("Riordan array requires g(0) != 0, f(0) = 0, f'(0) != 0")]
    RiordanDomain,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
