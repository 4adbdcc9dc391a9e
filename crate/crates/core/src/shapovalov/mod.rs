//! Shapovalov-type matrices for `B(e12)` on generic Verma tensors and their determinants.

pub mod formula;
pub mod matrix;
pub mod singular;

pub use formula::{
    column_degree_sum, divisibility_cascade_check, shap_det, verify_shap_formula, CascadeResult, DetMode,
    ShapDet, ShapFormula, ShapReport, SYMBOLIC_MAX_SIZE,
};
pub use matrix::{binomial, compositions, shap_matrix, ShapMatrix};
pub use singular::{
    elementary_symmetric, expected_leading_t21, k_matrix, k_matrix_det, leading_t21, singular_space,
    vandermonde_product,
};

use thiserror::Error;

use crate::exactring::AlgebraError;
use crate::yangrep::YangError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ShapError {
    #[error("out of range: {0}")]
    Range(String),
    #[error("symbolic determinant of size {size} exceeds the budget of {max}; use interpolated mode")]
    Budget { size: usize, max: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Yang(#[from] YangError),
}
