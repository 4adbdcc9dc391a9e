//! Contravariant forms, the form induced by `τ`, and unitarity certificates.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::exactring::scalar::{self, Scalar};
use crate::exactring::linalg::inverse;
use crate::exactring::matrix::{all_roots_positive_coeffs, char_poly_coeffs};
use crate::exactring::{nullspace, principal_minors_positive, ScalarMatrix};
use crate::yangrep::{FactorSpec, Module, NumericModule, Representation};

use super::chain::{r_chain, reversal_matrix};
use super::tau::{selected_convention, tau_map, StringBlocks, TauConvention};
use super::UnitaryError;

/// Diagonal Gram `⟨v^k, v^k⟩ = k! (a−b)(a−b−1)⋯(a−b−k+1)` of `L(a, b)`.
pub fn gl2_gram(a: &Scalar, b: &Scalar) -> Result<ScalarMatrix, UnitaryError> {
    let k = scalar::as_nonnegative_integer(&(a - b))
        .ok_or_else(|| UnitaryError::InvalidBlock(format!("a - b = {} is not a nonnegative integer", a - b)))?;
    let mut diag = Vec::with_capacity(k + 1);
    let mut norm = Scalar::one();
    for j in 0..=k {
        if j > 0 {
            // ⟨v^j, v^j⟩ = j (a − b − j + 1) ⟨v^{j−1}, v^{j−1}⟩
            norm *= scalar::int(j as i64) * (a - b - scalar::int(j as i64 - 1));
        }
        diag.push(norm.clone());
    }
    Ok(ScalarMatrix::from_diagonal(diag))
}

/// `Gram · t_ij^{(r)} = (t_ji^{(r)})ᵀ · Gram` for all `i, j, r`.
pub fn unitarity_check(rep: &Representation<Scalar>, gram: &ScalarMatrix) -> bool {
    if gram.rows() != rep.dim() || gram.cols() != rep.dim() {
        return false;
    }
    (1..=2).all(|i| {
        (1..=2).all(|j| {
            let deg = rep.t(i, j).degree().max(rep.t(j, i).degree());
            (1..=deg).all(|r| gram.mul(&rep.t_coeff(i, j, r)) == rep.t_coeff(j, i, r).transpose().mul(gram))
        })
    })
}

/// `map ∘ t_ij^{(r)}|source = t_ij^{(r)}|target ∘ map` for all `i, j, r`.
pub fn intertwiner_check(map: &ScalarMatrix, source: &Representation<Scalar>, target: &Representation<Scalar>) -> bool {
    if map.rows() != target.dim() || map.cols() != source.dim() {
        return false;
    }
    (1..=2).all(|i| {
        (1..=2).all(|j| {
            let deg = source.t(i, j).degree().max(target.t(i, j).degree());
            (1..=deg).all(|r| map.mul(&source.t_coeff(i, j, r)) == target.t_coeff(i, j, r).mul(map))
        })
    })
}

/// Basis of all intertwiners `source → target`, each as a `dim target × dim source` matrix.
pub fn intertwiners(source: &Representation<Scalar>, target: &Representation<Scalar>) -> Result<Vec<ScalarMatrix>, UnitaryError> {
    let (ds, dt) = (source.dim(), target.dim());
    let unknowns = ds * dt;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for i in 1..=2 {
        for j in 1..=2 {
            let deg = source.t(i, j).degree().max(target.t(i, j).degree());
            for r in 1..=deg {
                let s = source.t_coeff(i, j, r);
                let t = target.t_coeff(i, j, r);
                // (X S − T X)[p, q] with X[p, k] at index p·ds + k
                for p in 0..dt {
                    for q in 0..ds {
                        let mut row = vec![Scalar::zero(); unknowns];
                        for k in 0..ds {
                            row[p * ds + k] += &s[(k, q)];
                        }
                        for k in 0..dt {
                            row[k * ds + q] -= &t[(p, k)];
                        }
                        if row.iter().any(|c| !c.is_zero()) {
                            rows.push(row);
                        }
                    }
                }
            }
        }
    }
    let basis = if rows.is_empty() {
        (0..unknowns)
            .map(|k| {
                let mut v = vec![Scalar::zero(); unknowns];
                v[k] = Scalar::one();
                v
            })
            .collect()
    } else {
        nullspace(&ScalarMatrix::from_rows(rows)?)
    };
    Ok(basis.into_iter().map(|v| ScalarMatrix::from_fn(dt, ds, |p, k| v[p * ds + k].clone())).collect())
}

/// The unique-up-to-scalar intertwiner between two irreducible modules.
pub fn find_intertwiner(source: &Representation<Scalar>, target: &Representation<Scalar>) -> Result<ScalarMatrix, UnitaryError> {
    let mut all = intertwiners(source, target)?;
    if all.len() != 1 {
        return Err(UnitaryError::NoIntertwiner(format!("intertwiner space has dimension {}", all.len())));
    }
    Ok(all.remove(0))
}

/// Spin chain `L(c, c−1)` over the site parameters of `blocks`.
pub fn chain_module(blocks: &StringBlocks) -> Result<NumericModule, UnitaryError> {
    let factors = blocks.site_params().into_iter().map(|c| FactorSpec::irrep(c.clone(), c - Scalar::one())).collect();
    Ok(Module::new(factors)?)
}

/// `L(a_1, b_1) ⊗ … ⊗ L(a_n, b_n)`.
pub fn block_module(blocks: &StringBlocks) -> Result<NumericModule, UnitaryError> {
    let factors = blocks.blocks().iter().map(|(a, b)| FactorSpec::irrep(a.clone(), b.clone())).collect();
    Ok(Module::new(factors)?)
}

/// Embedding `s` of `L(a, b)` into `N_<(a, b)` as `v^j ↦ (t21^{(1)})^j` applied to the
/// highest-weight vector, and the orthogonal projection `p` with `p s = 1`.
pub fn block_embedding(a: &Scalar, b: &Scalar) -> Result<(ScalarMatrix, ScalarMatrix), UnitaryError> {
    let blocks = StringBlocks::new(vec![(a.clone(), b.clone())])?;
    let rep = Representation::new(chain_module(&blocks)?);
    let f = rep.t_coeff(2, 1, 1);
    let k = blocks.num_sites();
    let mut cols = Vec::with_capacity(k + 1);
    let mut v = rep.module().highest_weight_vector();
    for _ in 0..=k {
        cols.push(v.clone());
        v = f.mat_vec(&v);
    }
    let s = ScalarMatrix::from_fn(1 << k, k + 1, |i, j| cols[j][i].clone());
    let st = s.transpose();
    let p = inverse(&st.mul(&s))?.mul(&st);
    Ok((s, p))
}

fn kron_all(ms: Vec<ScalarMatrix>) -> ScalarMatrix {
    ms.into_iter().reduce(|acc, m| acc.kron(&m)).unwrap_or_else(|| ScalarMatrix::identity(1))
}

/// Embedding of the block tensor product into the source chain.
pub fn realization(blocks: &StringBlocks) -> Result<(ScalarMatrix, ScalarMatrix), UnitaryError> {
    let mut ss = Vec::new();
    let mut ps = Vec::new();
    for (a, b) in blocks.blocks() {
        let (s, p) = block_embedding(a, b)?;
        ss.push(s);
        ps.push(p);
    }
    Ok((kron_all(ss), kron_all(ps)))
}

/// `H(v, w) = ⟨τ v, J w⟩` on the source chain, `J` the reversal of all sites.
pub fn chain_form(blocks: &StringBlocks, conv: TauConvention) -> Result<ScalarMatrix, UnitaryError> {
    Ok(reversal_matrix(blocks.num_sites()).mul(&tau_map(blocks, conv)?))
}

fn restricted_gram(blocks: &StringBlocks, conv: TauConvention) -> Result<ScalarMatrix, UnitaryError> {
    let h = chain_form(blocks, conv)?;
    let (s, _) = realization(blocks)?;
    let g = s.transpose().mul(&h).mul(&s);
    let top = g[(0, 0)].clone();
    if top.is_zero() {
        return Err(UnitaryError::Degenerate);
    }
    Ok(g.scale(&top.recip()))
}

/// Gram of the induced form on `L(a_1,b_1) ⊗ … ⊗ L(a_n,b_n)` in its standard basis, normalized so
/// the highest-weight vector has norm 1.
pub fn induced_gram(blocks: &StringBlocks) -> Result<ScalarMatrix, UnitaryError> {
    blocks.require_hypothesis()?;
    restricted_gram(blocks, selected_convention()?)
}

/// Induced Gram on a tensor product of finite irreducibles given in any order: built on the
/// ordering `a_1 > b_1 > a_2 > …` and pulled back along the intertwiner.
pub fn module_gram(module: &NumericModule) -> Result<ScalarMatrix, UnitaryError> {
    let mut blocks = Vec::new();
    for f in module.factors() {
        match f {
            FactorSpec::FiniteIrrep { a, b } => blocks.push((a.clone(), b.clone())),
            other => return Err(UnitaryError::InvalidBlock(format!("{other:?} is not a finite irreducible factor"))),
        }
    }
    let given = StringBlocks::new(blocks.clone())?;
    if given.satisfies_hypothesis() {
        return induced_gram(&given);
    }
    let mut sorted = blocks;
    sorted.sort_by(|x, y| y.0.cmp(&x.0));
    let ordered = StringBlocks::new(sorted)?;
    ordered.require_hypothesis()?;
    let g = induced_gram(&ordered)?;
    let source = Representation::new(module.clone());
    let target = Representation::new(block_module(&ordered)?);
    let phi = find_intertwiner(&source, &target)?;
    let pulled = phi.transpose().mul(&g).mul(&phi);
    let top = pulled[(0, 0)].clone();
    if top.is_zero() {
        return Err(UnitaryError::Degenerate);
    }
    Ok(pulled.scale(&top.recip()))
}

#[derive(Clone, Debug, Serialize)]
pub struct PositivityCertificate {
    pub self_adjoint: bool,
    pub positive: bool,
    /// Eigenvalue positivity of the R-chain, for spin chains only.
    pub r_chain_positive: Option<bool>,
}

pub fn positivity_certificate(blocks: &StringBlocks) -> Result<PositivityCertificate, UnitaryError> {
    let conv = selected_convention()?;
    let h = chain_form(blocks, conv)?;
    let self_adjoint = h.is_symmetric();
    let gram_positive = match restricted_gram(blocks, conv) {
        Ok(g) => g.is_symmetric() && principal_minors_positive(&g)?,
        Err(UnitaryError::Degenerate) => false,
        Err(e) => return Err(e),
    };
    let r_chain_positive = if blocks.is_spin_chain() {
        let a: Vec<Scalar> = blocks.blocks().iter().map(|(a, _)| a.clone()).collect();
        let r = r_chain(&a, conv.r_sign, conv.arg_order)?;
        Some(all_roots_positive_coeffs(&char_poly_coeffs(&r)?).unwrap_or(false))
    } else {
        None
    };
    Ok(PositivityCertificate {
        self_adjoint,
        positive: gram_positive && r_chain_positive.unwrap_or(true),
        r_chain_positive,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct UnitaryCertificate {
    pub blocks: Vec<[String; 2]>,
    pub r_sign_convention: TauConvention,
    pub tau_rank: usize,
    pub expected_rank: usize,
    pub self_adjoint: bool,
    pub positive: bool,
    pub unitary: bool,
}

/// Full certificate for blocks satisfying `a_1 > b_1 > a_2 > … > b_n`.
pub fn unitary_certificate(blocks: &StringBlocks) -> Result<UnitaryCertificate, UnitaryError> {
    blocks.require_hypothesis()?;
    let conv = selected_convention()?;
    let tau = tau_map(blocks, conv)?;
    let tau_rank = crate::exactring::rank(&tau);
    let pos = positivity_certificate(blocks)?;
    let gram = induced_gram(blocks)?;
    let rep = Representation::new(block_module(blocks)?);
    let unitary = unitarity_check(&rep, &gram);
    Ok(UnitaryCertificate {
        blocks: blocks.as_text(),
        r_sign_convention: conv,
        tau_rank,
        expected_rank: blocks.expected_rank(),
        self_adjoint: pos.self_adjoint,
        positive: pos.positive,
        unitary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::scalar::int;

    #[test]
    fn gl2_grams() {
        assert_eq!(gl2_gram(&int(1), &int(0)).unwrap(), ScalarMatrix::identity(2));
        assert_eq!(gl2_gram(&int(2), &int(0)).unwrap(), ScalarMatrix::from_diagonal(vec![int(1), int(2), int(4)]));
        assert!(gl2_gram(&int(0), &int(1)).is_err());
    }

    #[test]
    fn embedding_is_split() {
        let (s, p) = block_embedding(&int(2), &int(0)).unwrap();
        assert_eq!(p.mul(&s), ScalarMatrix::identity(3));
        assert_eq!(s.rows(), 4);
    }
}
