//! Evaluation-type modules of Y(gl2) and the exact matrices of `T(u)`, `qdet T(u)`, `tr C T(u)`.

pub mod checks;
pub mod factor;
pub mod module;
pub mod series;

pub use checks::{group_action, qdet_centrality_check, rtt_check, RttReport};
pub use factor::{gl2_matrix, FactorSpec};
pub use module::{weight_point, Module, NumericModule, SymbolicModule};
pub use series::{
    generator_series, qdet_series, single_factor_action, trace_series, MatPoly, OperatorPoly,
    QdetSeries, Representation,
};

use thiserror::Error;

use crate::exactring::AlgebraError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum YangError {
    #[error("invalid factor: {0}")]
    InvalidFactor(String),
    #[error("numeric and symbolic factors cannot share a module")]
    MixedCoefficients,
    #[error("bad sample: {0}")]
    BadSample(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
