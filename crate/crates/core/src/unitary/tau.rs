//! String blocks and the map `τ = τ₂τ₁` on the spin chain `N_<(a_1,b_1) ⊗ … ⊗ N_<(a_n,b_n)`.

use std::sync::OnceLock;

use num_traits::One;
use serde::Serialize;

use crate::exactring::scalar::{self, Scalar};
use crate::exactring::{rank, ScalarMatrix};

use super::chain::{word_product, ArgOrder, RSign};
use super::UnitaryError;

/// Blocks `(a_i, b_i)` with `k_i = a_i − b_i` a positive integer.
#[derive(Clone, Debug, PartialEq)]
pub struct StringBlocks {
    blocks: Vec<(Scalar, Scalar)>,
}

impl StringBlocks {
    pub fn new(blocks: Vec<(Scalar, Scalar)>) -> Result<Self, UnitaryError> {
        if blocks.is_empty() {
            return Err(UnitaryError::InvalidBlock("no blocks".into()));
        }
        for (a, b) in &blocks {
            match scalar::as_nonnegative_integer(&(a - b)) {
                Some(k) if k > 0 => {}
                _ => {
                    return Err(UnitaryError::InvalidBlock(format!(
                        "a - b must be a positive integer, got ({}, {})",
                        scalar::format_scalar(a),
                        scalar::format_scalar(b)
                    )))
                }
            }
        }
        let sites: usize = blocks.iter().map(|(a, b)| scalar::as_nonnegative_integer(&(a - b)).unwrap()).sum();
        if sites > 12 {
            return Err(UnitaryError::InvalidBlock(format!("{sites} chain sites exceed the supported 12")));
        }
        Ok(StringBlocks { blocks })
    }

    pub fn from_ints(blocks: &[(i64, i64)]) -> Result<Self, UnitaryError> {
        Self::new(blocks.iter().map(|&(a, b)| (scalar::int(a), scalar::int(b))).collect())
    }

    /// Spin chain `L(a_1, a_1−1) ⊗ … ⊗ L(a_n, a_n−1)`.
    pub fn spin_chain(a: &[Scalar]) -> Result<Self, UnitaryError> {
        Self::new(a.iter().map(|x| (x.clone(), x - Scalar::one())).collect())
    }

    pub fn blocks(&self) -> &[(Scalar, Scalar)] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// `k_i = a_i − b_i`.
    pub fn ks(&self) -> Vec<usize> {
        self.blocks.iter().map(|(a, b)| scalar::as_nonnegative_integer(&(a - b)).unwrap()).collect()
    }

    pub fn num_sites(&self) -> usize {
        self.ks().iter().sum()
    }

    /// `q_i = k_{i+1} + … + k_n`.
    pub fn q(&self, i: usize) -> usize {
        self.ks()[i + 1..].iter().sum()
    }

    /// Site parameters `b_1+1, …, a_1, b_2+1, …, a_2, …` of the source chain.
    pub fn site_params(&self) -> Vec<Scalar> {
        let mut out = Vec::new();
        for ((_, b), k) in self.blocks.iter().zip(self.ks()) {
            for s in 1..=k {
                out.push(b + scalar::int(s as i64));
            }
        }
        out
    }

    pub fn is_spin_chain(&self) -> bool {
        self.ks().iter().all(|&k| k == 1)
    }

    /// `a_1 > b_1 > a_2 > … > a_n > b_n`.
    pub fn satisfies_hypothesis(&self) -> bool {
        let chain: Vec<&Scalar> = self.blocks.iter().flat_map(|(a, b)| [a, b]).collect();
        chain.windows(2).all(|w| w[0] > w[1])
    }

    pub fn require_hypothesis(&self) -> Result<(), UnitaryError> {
        if self.satisfies_hypothesis() {
            Ok(())
        } else {
            Err(UnitaryError::Hypothesis(format!("strings are not ordered as a1 > b1 > a2 > ... : {}", self.label())))
        }
    }

    /// `∏ dim L(a_i, b_i)`.
    pub fn expected_rank(&self) -> usize {
        self.ks().iter().map(|k| k + 1).product()
    }

    pub fn label(&self) -> String {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|(a, b)| format!("({},{})", scalar::format_scalar(a), scalar::format_scalar(b)))
            .collect();
        parts.join("")
    }

    pub fn as_text(&self) -> Vec<[String; 2]> {
        self.blocks.iter().map(|(a, b)| [scalar::format_scalar(a), scalar::format_scalar(b)]).collect()
    }
}

/// `τ₁` pulls each block, last site first, through the blocks to its right; `τ₂` then reverses
/// every block in place. Entries are left positions of adjacent flips, first entry acting first.
pub fn tau_word(blocks: &StringBlocks) -> Vec<usize> {
    let ks = blocks.ks();
    let n = ks.len();
    let mut word = Vec::new();
    // after the first i−1 steps block i sits at the front, followed by q_i sites
    for i in 0..n.saturating_sub(1) {
        let q = blocks.q(i);
        for t in (0..ks[i]).rev() {
            word.extend(t..t + q);
        }
    }
    // blocks are now in the order n, …, 1 and block i starts after q_i sites
    for (i, &k) in ks.iter().enumerate() {
        let q = blocks.q(i);
        for j in 1..k {
            for s in 1..=k - j {
                word.push(q + s - 1);
            }
        }
    }
    word
}

/// Sign conventions under which `τ` is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TauConvention {
    pub r_sign: RSign,
    pub arg_order: ArgOrder,
}

impl TauConvention {
    /// The literal reading of `σ_{s+q_i, s+q_i+1}(s)`: the argument is `c_right − c_left`.
    pub fn literal(r_sign: RSign) -> Self {
        TauConvention { r_sign, arg_order: ArgOrder::RightMinusLeft }
    }
}

pub fn tau_map(blocks: &StringBlocks, conv: TauConvention) -> Result<ScalarMatrix, UnitaryError> {
    Ok(word_product(&blocks.site_params(), &tau_word(blocks), conv.r_sign, conv.arg_order)?.0)
}

pub fn tau_rank(blocks: &StringBlocks, conv: TauConvention) -> Result<usize, UnitaryError> {
    Ok(rank(&tau_map(blocks, conv)?))
}

/// Blocks on which the rank criterion selects the convention.
pub fn selection_suite() -> Vec<StringBlocks> {
    [
        vec![(2, 0)],
        vec![(3, 0)],
        vec![(3, 2), (1, 0)],
        vec![(5, 3), (2, 0)],
        vec![(4, 2), (1, 0), (-1, -2)],
    ]
    .iter()
    .map(|b| StringBlocks::from_ints(b).expect("valid suite"))
    .collect()
}

/// Outcome of the convention selection.
#[derive(Clone, Debug, Serialize)]
pub struct ConventionReport {
    pub selected: Option<TauConvention>,
    /// `(convention, blocks label, rank, expected)` for every evaluated case.
    pub trials: Vec<(TauConvention, String, usize, usize)>,
}

/// Tries the two R-sign conventions with literal `τ₂` arguments, then both with flipped
/// arguments, and keeps the first one meeting `rank τ = ∏ dim L(a_i, b_i)` on the whole suite.
pub fn select_convention(suite: &[StringBlocks]) -> Result<ConventionReport, UnitaryError> {
    let candidates = [
        TauConvention::literal(RSign::Minus),
        TauConvention::literal(RSign::Plus),
        TauConvention { r_sign: RSign::Minus, arg_order: ArgOrder::LeftMinusRight },
        TauConvention { r_sign: RSign::Plus, arg_order: ArgOrder::LeftMinusRight },
    ];
    let mut trials = Vec::new();
    for conv in candidates {
        let mut ok = true;
        for b in suite {
            let r = tau_rank(b, conv)?;
            ok &= r == b.expected_rank();
            trials.push((conv, b.label(), r, b.expected_rank()));
        }
        if ok {
            return Ok(ConventionReport { selected: Some(conv), trials });
        }
    }
    Ok(ConventionReport { selected: None, trials })
}

/// The convention chosen once on [`selection_suite`].
pub fn selected_convention() -> Result<TauConvention, UnitaryError> {
    static SELECTED: OnceLock<Option<TauConvention>> = OnceLock::new();
    let sel = SELECTED.get_or_init(|| select_convention(&selection_suite()).ok().and_then(|r| r.selected));
    sel.ok_or(UnitaryError::NoConvention)
}
