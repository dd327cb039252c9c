use thiserror::Error;

/// Errors raised by the algebra and combinatorics layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("the zero polynomial has no initial exponent")]
    ZeroPolynomial,

    #[error("k = {k} out of range for {m} variables (need 1 <= k < m)")]
    KOutOfRange { k: usize, m: usize },

    #[error("singular coordinate change")]
    SingularMatrix,

    #[error("level over {a:?} is infinite")]
    InfiniteLevel { a: Vec<u32> },

    #[error("diagram is not in D*_{k}({m})")]
    NotInDkStar { k: usize, m: usize },

    #[error("diagram has infinite complement")]
    InfiniteComplement,

    #[error("eventual polynomial failed validation up to eta = {eta}")]
    PolynomialFitFailed { eta: u64 },

    #[error("reduction exceeded {0} steps")]
    ReductionBudget(usize),

    #[error("reduction coefficients exceeded {0} bits")]
    CoefficientGrowth(u64),

    #[error("all jets of order {mu} vanish")]
    AllJetsZero { mu: u32 },

    #[error("expected {expected} generators, found {found}")]
    GeneratorCount { expected: usize, found: usize },

    #[error("not certified: {0}")]
    NotCertified(String),

    #[error("falsified: {0}")]
    Falsified(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
