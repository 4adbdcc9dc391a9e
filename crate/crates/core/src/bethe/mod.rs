//! Bethe subalgebras `B(C)` at points of the blow-up, with exact and numeric spectral data.

pub mod algebra;
pub mod point;
pub mod scan;
pub mod spectrum;

pub use algebra::{
    algebra_closure, bethe_generator_matrices, certify_generators, commutativity_check, cyclic_check,
    exceptional_generator, krylov_dim, self_adjoint_check, simple_spectrum_certificate, AlgebraBasis,
    GeneratorSet, GeneratorTag, SpectrumCertificate, Verdict,
};
pub use point::{mat2, BlowupPoint, Mat2};
pub use scan::{rp1_scan, GridSpec, ScanTable};
pub use spectrum::{joint_spectrum_numeric, JointSpectrum};

use thiserror::Error;

use crate::exactring::AlgebraError;
use crate::yangrep::YangError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BetheError {
    #[error("the zero matrix is not a point of projective space")]
    ZeroMatrix,
    #[error("a scalar matrix class needs exceptional coordinates [y0:y1:y2]")]
    MissingExceptional,
    #[error("incidence: {0}")]
    Incidence(String),
    #[error("the supplied form is not positive definite")]
    NotPositiveDefinite,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Yang(#[from] YangError),
}
