//! Tensor products of factors with their product basis.

use std::collections::HashMap;

use num_traits::Zero;

use crate::exactring::scalar::{self, Scalar};
use crate::exactring::{Coeff, Matrix, MultiPoly, PolyRing};

use super::factor::{gl2_matrix, FactorSpec};
use super::YangError;

/// `V_1 ⊗ … ⊗ V_n` with basis tuples `(k_1, …, k_n)` in lexicographic order.
///
/// `T` is the coefficient ring: `Scalar` for numeric weights, `MultiPoly` for generic Verma factors.
#[derive(Clone, Debug)]
pub struct Module<T> {
    factors: Vec<FactorSpec>,
    weights: Vec<(T, T)>,
    dims: Vec<usize>,
    basis: Vec<Vec<usize>>,
    ring: Option<PolyRing>,
}

pub type NumericModule = Module<Scalar>;
pub type SymbolicModule = Module<MultiPoly>;

fn enumerate_basis(dims: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &d in dims {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..d).map(move |k| {
                    let mut t = prefix.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
    }
    out
}

impl Module<Scalar> {
    /// A module whose factors all carry numeric weights.
    pub fn new(factors: Vec<FactorSpec>) -> Result<Self, YangError> {
        let mut weights = Vec::with_capacity(factors.len());
        for f in &factors {
            f.validate()?;
            let w = f.numeric_weights().ok_or(YangError::MixedCoefficients)?;
            weights.push(w);
        }
        let dims: Vec<usize> = factors.iter().map(FactorSpec::dim).collect();
        Ok(Module { basis: enumerate_basis(&dims), factors, weights, dims, ring: None })
    }

    /// `Σ(a_i − b_i) − 2 Σ k_i` for basis vector `idx`.
    pub fn h_degree(&self, idx: usize) -> Scalar {
        let top: Scalar = self.weights.iter().map(|(a, b)| a - b).fold(Scalar::zero(), |s, x| s + x);
        top - scalar::int(2 * self.level(idx) as i64)
    }
}

impl Module<MultiPoly> {
    /// A module of generic Verma factors; weights are the variables `a{i}`, `b{i}`.
    pub fn generic(factors: Vec<FactorSpec>) -> Result<Self, YangError> {
        let mut names = Vec::new();
        for f in &factors {
            match f {
                FactorSpec::GenericVerma { index, .. } => {
                    names.push(format!("a{index}"));
                    names.push(format!("b{index}"));
                }
                _ => return Err(YangError::MixedCoefficients),
            }
        }
        let ring = PolyRing::new(names)?;
        let weights = (0..factors.len())
            .map(|i| (ring.var_at(2 * i), ring.var_at(2 * i + 1)))
            .collect();
        let dims: Vec<usize> = factors.iter().map(FactorSpec::dim).collect();
        Ok(Module { basis: enumerate_basis(&dims), factors, weights, dims, ring: Some(ring) })
    }

    /// Generic Verma factors `a1,b1,…,an,bn`, each truncated at `cutoff`.
    pub fn generic_chain(n: usize, cutoff: usize) -> Result<Self, YangError> {
        Self::generic((1..=n).map(|i| FactorSpec::generic(i, cutoff)).collect())
    }
}

impl<T: Coeff> Module<T> {
    pub fn factors(&self) -> &[FactorSpec] {
        &self.factors
    }

    pub fn weights(&self) -> &[(T, T)] {
        &self.weights
    }

    pub fn ring(&self) -> Option<&PolyRing> {
        self.ring.as_ref()
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    pub fn factor_dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<usize>] {
        &self.basis
    }

    pub fn index_of(&self, tuple: &[usize]) -> Option<usize> {
        if tuple.len() != self.dims.len() || tuple.iter().zip(&self.dims).any(|(k, d)| k >= d) {
            return None;
        }
        Some(tuple.iter().zip(&self.dims).fold(0, |acc, (k, d)| acc * d + k))
    }

    /// `Σ k_i`, the number of lowering steps from the highest-weight vector.
    pub fn level(&self, idx: usize) -> usize {
        self.basis[idx].iter().sum()
    }

    pub fn highest_weight_vector(&self) -> Vec<T> {
        let mut v = vec![T::zero_elt(); self.dim()];
        v[0] = T::one_elt();
        v
    }

    /// Basis indices whose truncated coordinates satisfy `k_i + depth ≤ cutoff_i`.
    ///
    /// Products of at most `depth` generators applied to such a vector never reach the truncation.
    pub fn interior_columns(&self, depth: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&idx| {
                self.basis[idx]
                    .iter()
                    .zip(&self.factors)
                    .all(|(k, f)| f.cutoff().is_none_or(|c| k + depth <= c))
            })
            .collect()
    }

    /// Basis indices with `Σ k_i ≤ grade`.
    pub fn grade_indices(&self, grade: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.level(i) <= grade).collect()
    }

    pub fn has_truncation(&self) -> bool {
        self.factors.iter().any(|f| f.cutoff().is_some())
    }

    /// `E_ij` on factor `slot`.
    pub fn factor_gl2(&self, slot: usize, i: usize, j: usize) -> Matrix<T> {
        let (a, b) = &self.weights[slot];
        gl2_matrix(a, b, self.dims[slot], self.factors[slot].is_dual(), i, j)
    }

    /// Embeds a single-factor operator into slot `slot` of the tensor product.
    pub fn embed(&self, slot: usize, op: &Matrix<T>) -> Matrix<T> {
        let mut acc = Matrix::<T>::identity(1);
        for (s, &d) in self.dims.iter().enumerate() {
            let piece = if s == slot { op.clone() } else { Matrix::identity(d) };
            acc = acc.kron(&piece);
        }
        acc
    }

    /// Whether every nonzero entry `(r, c)` satisfies `level(r) = level(c) + shift`.
    pub fn respects_level_shift(&self, m: &Matrix<T>, shift: i64) -> bool {
        (0..m.rows()).all(|r| {
            (0..m.cols()).all(|c| {
                m[(r, c)].is_zero_elt() || self.level(r) as i64 == self.level(c) as i64 + shift
            })
        })
    }

    /// Values for the weight variables, for evaluating a symbolic module at a numeric point.
    pub fn weight_names(&self) -> Vec<String> {
        self.ring.as_ref().map(|r| r.names().to_vec()).unwrap_or_default()
    }
}

/// Point assignment `a{i} ↦ a`, `b{i} ↦ b` for the generic factors of a module.
pub fn weight_point(module: &SymbolicModule, values: &[(Scalar, Scalar)]) -> HashMap<String, Scalar> {
    let names = module.weight_names();
    let mut point = HashMap::new();
    for (i, (a, b)) in values.iter().enumerate() {
        point.insert(names[2 * i].clone(), a.clone());
        point.insert(names[2 * i + 1].clone(), b.clone());
    }
    point
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::scalar::int;

    #[test]
    fn dimensions_and_degrees() {
        let m = Module::new(vec![FactorSpec::irrep_int(1, 0)]).unwrap();
        assert_eq!(m.dim(), 2);
        assert_eq!(m.h_degree(0), int(1));
        assert_eq!(m.h_degree(1), int(-1));
        let m = Module::new(vec![FactorSpec::irrep_int(1, 0), FactorSpec::irrep_int(3, 2)]).unwrap();
        assert_eq!(m.dim(), 4);
        let m = Module::new(vec![FactorSpec::verma(int(1), int(4), 3)]).unwrap();
        assert_eq!(m.dim(), 4);
        assert_eq!(m.basis()[3], vec![3]);
    }

    #[test]
    fn invalid_irrep_is_rejected() {
        assert!(Module::new(vec![FactorSpec::irrep(int(0), int(1))]).is_err());
    }

    #[test]
    fn lexicographic_basis() {
        let m = Module::new(vec![FactorSpec::irrep_int(1, 0), FactorSpec::irrep_int(2, 0)]).unwrap();
        assert_eq!(m.basis()[1], vec![0, 1]);
        assert_eq!(m.basis()[3], vec![1, 0]);
        assert_eq!(m.index_of(&[1, 2]), Some(5));
    }

    #[test]
    fn mixed_rings_are_rejected() {
        assert!(Module::generic(vec![FactorSpec::irrep_int(1, 0)]).is_err());
        assert!(Module::new(vec![FactorSpec::generic(1, 2)]).is_err());
    }

    #[test]
    fn interior_and_grades() {
        let m = Module::new(vec![FactorSpec::verma(int(1), int(4), 3), FactorSpec::verma(int(0), int(2), 3)])
            .unwrap();
        assert_eq!(m.interior_columns(2).len(), 4);
        assert_eq!(m.grade_indices(1).len(), 3);
    }
}
