use thiserror::Error;

use crate::lie::{JacobiDefect, Triple};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),

    #[error("structure constant {triple} is out of range for dimension {dim}")]
    IndexOutOfRange { triple: Triple, dim: usize },

    #[error("structure constant {triple} must have i < j")]
    IndexOrder { triple: Triple },

    #[error("structure constant {triple} is given more than once")]
    DuplicateTriple { triple: Triple },

    #[error("structure constant {triple} is zero")]
    ZeroConstant { triple: Triple },

    #[error("Jacobi identity fails on {} basis triple(s)", .0.len())]
    JacobiViolation(Vec<JacobiDefect>),

    #[error("algebra is not nilpotent: lower central series stabilises at dimension {0}")]
    NotNilpotent(usize),

    #[error("algebra is abelian, so its index set is empty")]
    EmptyIndexSet,

    #[error("enumeration is not a permutation of the index set")]
    NotAnEnumeration,

    #[error("grading has {found} weights for a {expected}-dimensional algebra, or a zero weight")]
    InvalidGrading { expected: usize, found: usize },

    #[error("matrix is not a derivation")]
    NotADerivation,

    #[error("matrix is not diagonal")]
    NotDiagonal,

    #[error("trace(D^2) is zero")]
    ZeroTraceSquare,

    #[error("metric entries must be strictly positive")]
    NonPositiveMetric,

    #[error("invalid family parameter: {0}")]
    InvalidParameter(String),

    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("line {line}: {source}")]
    AtLine { line: usize, source: Box<Error> },
}
