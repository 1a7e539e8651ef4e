use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The twist map `φ` has no available inverse, so left-sided
    /// operations are undefined.
    #[error("left-sided operation needs an invertible twist map φ")]
    NotLeftCapable,
    #[error("operands belong to different skew polynomial rings")]
    TwistMismatch,
    #[error("the zero polynomial has no leading monomial")]
    ZeroPolynomial,
    #[error("conjugation by zero")]
    ZeroConjugator,
    #[error("leading monomial {word} has degree {got}, expected {expected}")]
    BadLeadingMonomial { word: String, got: usize, expected: usize },
    #[error("the interpolation system is inconsistent")]
    Infeasible,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("invalid constraint set: {0}")]
    InvalidSpec(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal verification failed: {0}")]
    Verification(String),
}
