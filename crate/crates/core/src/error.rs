use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    /// A divisor that is zero, or vanishes to the wrong order at t = 0.
    #[error("degenerate divisor: {0}")]
    DegenerateDivisor(String),

    #[error("numerator vanishes only to order {found} at t = 0, need at least {needed}")]
    NotDivisible { needed: usize, found: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("division by zero: {0}")]
    UndefinedDivision(String),

    #[error("p-adic precision exhausted: {0}")]
    PrecisionExhausted(String),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}
