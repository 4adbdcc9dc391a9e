//! Single evaluation-type factors and their gl2 action in the `v^k` basis.

use serde::{Deserialize, Serialize};

use crate::exactring::scalar::{self, Scalar};
use crate::exactring::{Coeff, Matrix};

use super::YangError;

/// One tensor factor. `a` and `b` are the highest weights; truncated factors keep `v^0..v^cutoff`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FactorSpec {
    FiniteIrrep {
        #[serde(with = "scalar::serde_text")]
        a: Scalar,
        #[serde(with = "scalar::serde_text")]
        b: Scalar,
    },
    TruncatedVerma {
        #[serde(with = "scalar::serde_text")]
        a: Scalar,
        #[serde(with = "scalar::serde_text")]
        b: Scalar,
        cutoff: usize,
    },
    DualTruncatedVerma {
        #[serde(with = "scalar::serde_text")]
        a: Scalar,
        #[serde(with = "scalar::serde_text")]
        b: Scalar,
        cutoff: usize,
    },
    /// Verma module with symbolic weights `a{index}`, `b{index}`.
    GenericVerma { index: usize, cutoff: usize },
}

impl FactorSpec {
    pub fn irrep(a: Scalar, b: Scalar) -> Self {
        FactorSpec::FiniteIrrep { a, b }
    }

    pub fn irrep_int(a: i64, b: i64) -> Self {
        FactorSpec::FiniteIrrep { a: scalar::int(a), b: scalar::int(b) }
    }

    pub fn verma(a: Scalar, b: Scalar, cutoff: usize) -> Self {
        FactorSpec::TruncatedVerma { a, b, cutoff }
    }

    pub fn dual_verma(a: Scalar, b: Scalar, cutoff: usize) -> Self {
        FactorSpec::DualTruncatedVerma { a, b, cutoff }
    }

    pub fn generic(index: usize, cutoff: usize) -> Self {
        FactorSpec::GenericVerma { index, cutoff }
    }

    pub fn validate(&self) -> Result<(), YangError> {
        if let FactorSpec::FiniteIrrep { a, b } = self {
            if scalar::as_nonnegative_integer(&(a - b)).is_none() {
                return Err(YangError::InvalidFactor(format!(
                    "L({}, {}) needs a - b to be a nonnegative integer",
                    scalar::format_scalar(a),
                    scalar::format_scalar(b)
                )));
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        match self {
            FactorSpec::FiniteIrrep { a, b } => {
                scalar::as_nonnegative_integer(&(a - b)).expect("validated factor") + 1
            }
            FactorSpec::TruncatedVerma { cutoff, .. }
            | FactorSpec::DualTruncatedVerma { cutoff, .. }
            | FactorSpec::GenericVerma { cutoff, .. } => cutoff + 1,
        }
    }

    /// Degree bound of a truncated factor; `None` for finite irreducibles.
    pub fn cutoff(&self) -> Option<usize> {
        match self {
            FactorSpec::FiniteIrrep { .. } => None,
            FactorSpec::TruncatedVerma { cutoff, .. }
            | FactorSpec::DualTruncatedVerma { cutoff, .. }
            | FactorSpec::GenericVerma { cutoff, .. } => Some(*cutoff),
        }
    }

    pub fn numeric_weights(&self) -> Option<(Scalar, Scalar)> {
        match self {
            FactorSpec::FiniteIrrep { a, b }
            | FactorSpec::TruncatedVerma { a, b, .. }
            | FactorSpec::DualTruncatedVerma { a, b, .. } => Some((a.clone(), b.clone())),
            FactorSpec::GenericVerma { .. } => None,
        }
    }

    pub fn is_dual(&self) -> bool {
        matches!(self, FactorSpec::DualTruncatedVerma { .. })
    }
}

/// Matrix of `E_ij` (1-based indices) on a factor of dimension `dim` with weights `(a, b)`.
///
/// Columns are inputs: entry `(r, c)` is the `v^r` coefficient of `E_ij v^c`.
pub fn gl2_matrix<T: Coeff>(a: &T, b: &T, dim: usize, dual: bool, i: usize, j: usize) -> Matrix<T> {
    if dual {
        return gl2_matrix(a, b, dim, false, j, i).transpose();
    }
    let k = |n: usize| T::from_scalar(scalar::int(n as i64));
    let mut m = Matrix::zeros(dim, dim);
    match (i, j) {
        (2, 1) => {
            for c in 0..dim.saturating_sub(1) {
                m[(c + 1, c)] = T::one_elt();
            }
        }
        (1, 2) => {
            // E12 v^c = c (a - b - c + 1) v^(c-1)
            let ab = a.sub_ref(b);
            for c in 1..dim {
                m[(c - 1, c)] = k(c).mul_ref(&ab.sub_ref(&k(c)).add_ref(&T::one_elt()));
            }
        }
        (1, 1) => {
            for c in 0..dim {
                m[(c, c)] = a.sub_ref(&k(c));
            }
        }
        (2, 2) => {
            for c in 0..dim {
                m[(c, c)] = b.add_ref(&k(c));
            }
        }
        _ => panic!("gl2 indices must be 1 or 2, got ({i}, {j})"),
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::scalar::int;
    use crate::exactring::ScalarMatrix;

    #[test]
    fn spin_half_lowering() {
        let m = gl2_matrix(&int(1), &int(0), 2, false, 2, 1);
        assert_eq!(m, ScalarMatrix::from_rows(vec![vec![int(0), int(0)], vec![int(1), int(0)]]).unwrap());
    }

    #[test]
    fn raising_on_l20() {
        let m = gl2_matrix(&int(2), &int(0), 3, false, 1, 2);
        assert_eq!(m[(1, 2)], int(2));
        assert_eq!(m[(0, 1)], int(2));
    }

    #[test]
    fn gl2_relations_inside_irrep() {
        let (a, b) = (int(5), int(2));
        let e = |i, j| gl2_matrix(&a, &b, 4, false, i, j);
        // [E12, E21] = E11 - E22 on a finite irreducible
        assert_eq!(e(1, 2).commutator(&e(2, 1)), e(1, 1).sub(&e(2, 2)));
        assert_eq!(e(1, 1).commutator(&e(1, 2)), e(1, 2));
    }

    #[test]
    fn finite_irrep_validation() {
        assert!(FactorSpec::irrep(int(1), int(2)).validate().is_err());
        assert!(FactorSpec::irrep(crate::exactring::ratio(1, 2), int(0)).validate().is_err());
        assert_eq!(FactorSpec::irrep_int(3, 2).dim(), 2);
    }
}
