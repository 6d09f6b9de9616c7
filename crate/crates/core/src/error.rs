use thiserror::Error;

/// Errors raised by the exact-arithmetic kernel and everything built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("angle {0} is a root of the Alexander polynomial; the signature is undefined there (use the jump function instead)")]
    SingularAtRoot(String),

    #[error("angle is 0 (zeta = 1)")]
    AngleOne,

    #[error("invalid angle {0}")]
    InvalidAngle(String),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("pattern has nonzero winding number {0}")]
    NonzeroWinding(i64),

    #[error("branched cover matrix S+S^T is singular")]
    SingularCover,

    #[error("unknown curve `{0}`")]
    UnknownCurve(String),

    #[error("no S^3 linking number registered for curves `{0}` and `{1}`")]
    MissingLinking(String, String),

    #[error("q must be nonzero")]
    ZeroQ,

    #[error("({n},{m},{l}) does not satisfy nl = m(m-1)")]
    NotAlexanderOne { n: i64, m: i64, l: i64 },

    #[error("invalid torus knot parameters ({0},{1})")]
    InvalidTorusParams(i64, i64),

    #[error("invalid braid word: {0}")]
    InvalidBraid(String),

    #[error("domain error: {0}")]
    DomainError(String),

    #[error("rational linking number must be negative, got {0}")]
    NonNegativeL(String),

    #[error("rational linking number of the lifted axis is zero; the instanton criterion does not apply")]
    ZeroLinking,

    #[error("tau oracle has no bound for `{0}`")]
    MissingTau(String),

    #[error("invalid tau bound for `{key}`: {value} is not in (0,1]")]
    InvalidTau { key: String, value: String },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
