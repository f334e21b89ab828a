//! Error types shared across the crate.

use thiserror::Error;

/// Errors from algebra, module, cochain and deformation operations.
#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error(
        "grading violation: product of basis elements {left} and {right} has support on a \
         component of the wrong parity"
    )]
    GradingViolation { left: usize, right: usize },
    #[error("the algebra is not nilpotent")]
    NotNilpotent,
    #[error("the algebra is not single-generated")]
    NotSingleGenerated,
    #[error("the odd part must be trivial for this operation")]
    OddPartNotTrivial,
    #[error("the table is not a Leibniz superalgebra: {0} basis triples violate the identity")]
    NotLeibniz(usize),
    #[error("invalid construction: {0}")]
    InvalidConstruction(String),
    #[error("expected a cochain of degree {expected_degree} and {expected_parity} parity")]
    WrongCochainShape {
        expected_degree: usize,
        expected_parity: crate::superalgebra::Parity,
    },
    #[error("the cochain is not a cocycle")]
    NotACocycle,
    #[error("the vector is not homogeneous")]
    NotHomogeneous,
}

/// Errors raised while reading interchange documents.
#[derive(Debug, Error)]
pub enum ParseError {
    #[error("malformed rational {0:?}: expected \"p\" or \"p/q\" with q > 0")]
    BadRational(String),
    #[error("unknown basis name {0:?}")]
    BadBasisName(String),
    #[error("invalid document: {0}")]
    Invalid(String),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
