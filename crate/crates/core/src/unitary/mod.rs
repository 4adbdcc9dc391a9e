//! Spin-chain R-matrices, the map `τ` on string blocks, and the unitary structure it induces.

pub mod chain;
pub mod form;
pub mod tau;

pub use chain::{
    braid_holds, perm_matrix, r_chain, r_matrix, reversal_matrix, reversal_word, reversal_word_alt, sigma,
    sigma_chain, word_product, ybe_holds, ArgOrder, RSign,
};
pub use form::{
    block_embedding, block_module, chain_form, chain_module, find_intertwiner, gl2_gram, induced_gram,
    intertwiner_check, intertwiners, module_gram, positivity_certificate, realization, unitarity_check,
    unitary_certificate, PositivityCertificate, UnitaryCertificate,
};
pub use tau::{
    select_convention, selected_convention, selection_suite, tau_map, tau_rank, tau_word, ConventionReport,
    StringBlocks, TauConvention,
};

use thiserror::Error;

use crate::exactring::AlgebraError;
use crate::yangrep::YangError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum UnitaryError {
    #[error("bad sites: {0}")]
    Sites(String),
    #[error("zero spectral parameter in an R-matrix factor")]
    ZeroArgument,
    #[error("invalid block: {0}")]
    InvalidBlock(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("no R-sign convention meets the rank criterion")]
    NoConvention,
    #[error("no intertwiner: {0}")]
    NoIntertwiner(String),
    #[error("the form vanishes on the highest-weight vector")]
    Degenerate,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Yang(#[from] YangError),
}
