//! Exact checks of the defining relations, centrality, and the GL2 group action.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::exactring::scalar::{self, Scalar};
use crate::exactring::{Coeff, Matrix, ScalarMatrix};

use super::factor::FactorSpec;
use super::module::NumericModule;
use super::series::Representation;
use super::YangError;

#[derive(Clone, Debug, Serialize)]
pub struct RttSample {
    #[serde(with = "scalar::serde_text")]
    pub u: Scalar,
    #[serde(with = "scalar::serde_text")]
    pub v: Scalar,
    /// Index quadruples `(i, j, k, l)` where the relation fails.
    pub failures: Vec<[usize; 4]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RttReport {
    pub module_dim: usize,
    /// Basis vectors on which the relation is compared (all of them unless a factor is truncated).
    pub columns_checked: usize,
    pub samples: Vec<RttSample>,
    pub all_hold: bool,
}

fn columns_equal<T: Coeff>(a: &Matrix<T>, b: &Matrix<T>, cols: &[usize]) -> bool {
    cols.iter().all(|&c| (0..a.rows()).all(|r| a[(r, c)] == b[(r, c)]))
}

/// `(u−v)[t_ij(u), t_kl(v)] = t_kj(u) t_il(v) − t_kj(v) t_il(u)` for all 16 index choices.
pub fn rtt_check<T: Coeff>(rep: &Representation<T>, samples: &[(Scalar, Scalar)]) -> Result<RttReport, YangError> {
    let cols = rep.module().interior_columns(2);
    let mut out = Vec::with_capacity(samples.len());
    for (u, v) in samples {
        if u == v || u.is_zero() || v.is_zero() {
            return Err(YangError::BadSample(format!(
                "need distinct nonzero u, v, got ({}, {})",
                scalar::format_scalar(u),
                scalar::format_scalar(v)
            )));
        }
        let at = |x: &Scalar| -> Vec<Vec<Matrix<T>>> {
            (1..=2).map(|i| (1..=2).map(|j| rep.t(i, j).eval(x)).collect()).collect()
        };
        let (tu, tv) = (at(u), at(v));
        let uv = T::from_scalar(u - v);
        let mut failures = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        let lhs = tu[i][j].commutator(&tv[k][l]).scale(&uv);
                        let rhs = tu[k][j].mul(&tv[i][l]).sub(&tv[k][j].mul(&tu[i][l]));
                        if !columns_equal(&lhs, &rhs, &cols) {
                            failures.push([i + 1, j + 1, k + 1, l + 1]);
                        }
                    }
                }
            }
        }
        out.push(RttSample { u: u.clone(), v: v.clone(), failures });
    }
    let all_hold = out.iter().all(|s| s.failures.is_empty());
    Ok(RttReport { module_dim: rep.dim(), columns_checked: cols.len(), samples: out, all_hold })
}

/// Every coefficient of the quantum-determinant numerator commutes with every `t_ij^{(r)}`.
pub fn qdet_centrality_check<T: Coeff>(rep: &Representation<T>) -> bool {
    let cols = rep.module().interior_columns(3);
    let gens = rep.generator_matrices();
    rep.qdet().lower_coeffs().iter().all(|q| {
        gens.iter().all(|(_, g)| columns_equal(&q.mul(g), &g.mul(q), &cols))
    })
}

fn exp_nilpotent(n: &ScalarMatrix) -> ScalarMatrix {
    let dim = n.rows();
    let mut acc = ScalarMatrix::identity(dim);
    let mut term = ScalarMatrix::identity(dim);
    for k in 1..=dim {
        term = term.mul(n).scale(&scalar::ratio(1, k as i64));
        if term.is_zero() {
            break;
        }
        acc = acc.add(&term);
    }
    acc
}

/// Action of `g ∈ GL2` on a product of finite irreducibles, up to an overall scalar.
///
/// Uses `g = [[1,0],[l,1]]·diag(d1,d2)·[[1,x],[0,1]]`, so `g11` must be nonzero.
pub fn group_action(module: &NumericModule, g: &[[Scalar; 2]; 2]) -> Result<ScalarMatrix, YangError> {
    let d1 = g[0][0].clone();
    if d1.is_zero() {
        return Err(YangError::Unsupported("group element with g11 = 0".into()));
    }
    let x = &g[0][1] / &d1;
    let l = &g[1][0] / &d1;
    let d2 = &g[1][1] - &l * &g[0][1];
    if d2.is_zero() {
        return Err(YangError::Unsupported("singular group element".into()));
    }
    let ratio = &d2 / &d1;
    let mut acc = ScalarMatrix::identity(1);
    for (slot, f) in module.factors().iter().enumerate() {
        if !matches!(f, FactorSpec::FiniteIrrep { .. }) {
            return Err(YangError::Unsupported("group action needs finite irreducible factors".into()));
        }
        let dim = module.factor_dims()[slot];
        let lower = exp_nilpotent(&module.factor_gl2(slot, 2, 1).scale(&l));
        let upper = exp_nilpotent(&module.factor_gl2(slot, 1, 2).scale(&x));
        let diag = ScalarMatrix::from_diagonal((0..dim).map(|k| num_traits::pow(ratio.clone(), k)).collect());
        acc = acc.kron(&lower.mul(&diag).mul(&upper));
    }
    Ok(acc)
}

/// Sanity helper: `ρ(g) E(X) ρ(g)^{-1} = E(g X g^{-1})` for the embedded gl2.
pub fn gl2_embedding<T: Coeff>(rep: &Representation<T>, x: &[[Scalar; 2]; 2]) -> Matrix<T> {
    let mut acc = Matrix::zeros(rep.dim(), rep.dim());
    for i in 0..2 {
        for j in 0..2 {
            if !x[i][j].is_zero() {
                acc = acc.add(&rep.t_coeff(i + 1, j + 1, 1).scale(&T::from_scalar(x[i][j].clone())));
            }
        }
    }
    acc
}

pub fn identity2() -> [[Scalar; 2]; 2] {
    [[Scalar::one(), Scalar::zero()], [Scalar::zero(), Scalar::one()]]
}
