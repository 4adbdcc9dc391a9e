//! Exact scalars, sparse polynomials and matrices over either.

pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod scalar;

pub use linalg::{nullspace, rank, solve, Span};
pub use matrix::{
    all_roots_positive, char_poly, principal_minors_positive, Coeff, Matrix, PolyMatrix,
    ScalarMatrix,
};
pub use poly::{Monomial, MultiPoly, PolyRing};
pub use scalar::{int, parse_scalar, ratio, Scalar};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("cannot parse rational from {0:?}")]
    ParseScalar(String),
    #[error("polynomials belong to different variable contexts")]
    ContextMismatch,
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("no value bound for variable {0}")]
    MissingBinding(String),
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("variable {0} declared twice")]
    DuplicateVariable(String),
    #[error("{0} variables exceed the supported maximum")]
    TooManyVariables(usize),
    #[error("exponent overflow in monomial arithmetic")]
    ExponentOverflow,
    #[error("division leaves a remainder")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero eigenvalue present")]
    ZeroEigenvalue,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("entry is not a constant")]
    NotConstant,
}
