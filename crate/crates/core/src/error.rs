use thiserror::Error;

/// Errors raised by the arithmetic and evaluation routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("mismatched q values: {0} vs {1}")]
    MismatchedQ(u64, u64),

    #[error("mismatched coefficient rings: {0}")]
    MismatchedRing(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("grade {0} is not an integer; the points deformation only has integer grades")]
    NonIntegerGrade(String),

    #[error("mixed deformation kinds: {0} and {1}")]
    MixedKinds(String, String),

    #[error("no {n}-th roots inside (Q/Z)^({p}): {p} divides {n}")]
    NoRoots { p: u64, n: u64 },

    #[error("series does not have constant term 1")]
    NotUnitSeries,

    #[error("{what} diverges at {value}: the parameter must exceed {threshold}")]
    Divergent {
        what: String,
        value: f64,
        threshold: f64,
    },

    #[error("basis kind mismatch: {0}")]
    KindMismatch(String),

    #[error("value is not integral: {0}")]
    NotIntegral(String),

    #[error("embedding unit {alpha} is not coprime to torsion order {order}")]
    EmbeddingNotCoprime { alpha: i64, order: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
