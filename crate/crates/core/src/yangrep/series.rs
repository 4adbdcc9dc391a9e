//! Matrix-valued series in `u^{-1}` and the Yangian generators acting on a module.

use num_traits::{One, Zero};

use crate::exactring::scalar::{self, Scalar};
use crate::exactring::{Coeff, Matrix};

use super::factor::{gl2_matrix, FactorSpec};
use super::module::Module;

/// `Σ_r M_r u^{-r}`; `coeffs[r]` is `M_r`.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorPoly<T> {
    dim: usize,
    coeffs: Vec<Matrix<T>>,
}

impl<T: Coeff> OperatorPoly<T> {
    pub fn new(dim: usize, coeffs: Vec<Matrix<T>>) -> Self {
        debug_assert!(coeffs.iter().all(|m| m.rows() == dim && m.cols() == dim));
        OperatorPoly { dim, coeffs }.trimmed()
    }

    pub fn zero(dim: usize) -> Self {
        OperatorPoly { dim, coeffs: vec![] }
    }

    pub fn identity(dim: usize) -> Self {
        OperatorPoly { dim, coeffs: vec![Matrix::identity(dim)] }
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(Matrix::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Largest `r` with `M_r ≠ 0` (0 for the zero series).
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, r: usize) -> Matrix<T> {
        self.coeffs.get(r).cloned().unwrap_or_else(|| Matrix::zeros(self.dim, self.dim))
    }

    pub fn coeffs(&self) -> &[Matrix<T>] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|r| self.coeff(r).add(&other.coeff(r))).collect();
        OperatorPoly { dim: self.dim, coeffs }.trimmed()
    }

    pub fn scale(&self, c: &T) -> Self {
        OperatorPoly { dim: self.dim, coeffs: self.coeffs.iter().map(|m| m.scale(c)).collect() }.trimmed()
    }

    /// Product of series (operator composition `self ∘ other`).
    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero(self.dim);
        }
        let len = self.coeffs.len() + other.coeffs.len() - 1;
        let mut coeffs = vec![Matrix::zeros(self.dim, self.dim); len];
        for (r, a) in self.coeffs.iter().enumerate() {
            for (s, b) in other.coeffs.iter().enumerate() {
                coeffs[r + s] = coeffs[r + s].add(&a.mul(b));
            }
        }
        OperatorPoly { dim: self.dim, coeffs }.trimmed()
    }

    /// `self ⊗ other`, a series on the tensor product.
    pub fn kron(&self, other: &Self) -> Self {
        let dim = self.dim * other.dim;
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero(dim);
        }
        let len = self.coeffs.len() + other.coeffs.len() - 1;
        let mut coeffs = vec![Matrix::zeros(dim, dim); len];
        for (r, a) in self.coeffs.iter().enumerate() {
            for (s, b) in other.coeffs.iter().enumerate() {
                coeffs[r + s] = coeffs[r + s].add(&a.kron(b));
            }
        }
        OperatorPoly { dim, coeffs }.trimmed()
    }

    /// Value at a nonzero rational `u`.
    pub fn eval(&self, u: &Scalar) -> Matrix<T> {
        let inv = u.recip();
        let mut pow = Scalar::one();
        let mut acc = Matrix::zeros(self.dim, self.dim);
        for m in &self.coeffs {
            acc = acc.add(&m.scale(&T::from_scalar(pow.clone())));
            pow *= &inv;
        }
        acc
    }

    /// `u^n · series` as a polynomial in `u`; requires `n ≥ degree`.
    pub fn cleared(&self, n: usize) -> MatPoly<T> {
        assert!(self.coeffs.len() <= n + 1, "clearing degree {n} below series degree");
        let coeffs = (0..=n).map(|k| self.coeff(n - k)).collect();
        MatPoly::new(self.dim, coeffs)
    }
}

/// `Σ_k P_k u^k` with matrix coefficients, ascending.
#[derive(Clone, Debug, PartialEq)]
pub struct MatPoly<T> {
    dim: usize,
    coeffs: Vec<Matrix<T>>,
}

impl<T: Coeff> MatPoly<T> {
    pub fn new(dim: usize, coeffs: Vec<Matrix<T>>) -> Self {
        let mut p = MatPoly { dim, coeffs };
        while p.coeffs.last().is_some_and(Matrix::is_zero) {
            p.coeffs.pop();
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Matrix<T> {
        self.coeffs.get(k).cloned().unwrap_or_else(|| Matrix::zeros(self.dim, self.dim))
    }

    pub fn coeffs(&self) -> &[Matrix<T>] {
        &self.coeffs
    }

    pub fn leading(&self) -> Matrix<T> {
        self.coeff(self.degree())
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new(self.dim, (0..len).map(|k| self.coeff(k).add(&other.coeff(k))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new(self.dim, (0..len).map(|k| self.coeff(k).sub(&other.coeff(k))).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::new(self.dim, vec![]);
        }
        let mut coeffs = vec![Matrix::zeros(self.dim, self.dim); self.coeffs.len() + other.coeffs.len() - 1];
        for (r, a) in self.coeffs.iter().enumerate() {
            for (s, b) in other.coeffs.iter().enumerate() {
                coeffs[r + s] = coeffs[r + s].add(&a.mul(b));
            }
        }
        Self::new(self.dim, coeffs)
    }

    /// `P(u + s)` by exact binomial expansion.
    pub fn shift(&self, s: &Scalar) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![Matrix::zeros(self.dim, self.dim); n];
        for (k, p) in self.coeffs.iter().enumerate() {
            // (u + s)^k = Σ_j C(k, j) s^{k-j} u^j
            let mut binom = Scalar::one();
            for j in (0..=k).rev() {
                let c = &binom * num_traits::pow(s.clone(), k - j);
                out[j] = out[j].add(&p.scale(&T::from_scalar(c)));
                // C(k, j-1) = C(k, j) * j / (k - j + 1)
                binom = binom * scalar::int(j as i64) / scalar::int((k - j + 1) as i64);
            }
        }
        Self::new(self.dim, out)
    }

    pub fn eval(&self, u: &Scalar) -> Matrix<T> {
        let mut acc = Matrix::zeros(self.dim, self.dim);
        for p in self.coeffs.iter().rev() {
            acc = acc.scale(&T::from_scalar(u.clone())).add(p);
        }
        acc
    }
}

/// `t_ij(u)` on one factor: `δ_ij + E_ij u^{-1}`.
pub fn single_factor_action<T: Coeff>(a: &T, b: &T, dim: usize, dual: bool, i: usize, j: usize) -> OperatorPoly<T> {
    let e = gl2_matrix(a, b, dim, dual, i, j);
    let m0 = if i == j { Matrix::identity(dim) } else { Matrix::zeros(dim, dim) };
    OperatorPoly::new(dim, vec![m0, e])
}

/// Numeric single-factor action straight from a [`FactorSpec`].
pub fn factor_series(f: &FactorSpec, i: usize, j: usize) -> Option<OperatorPoly<Scalar>> {
    let (a, b) = f.numeric_weights()?;
    Some(single_factor_action(&a, &b, f.dim(), f.is_dual(), i, j))
}

/// All four series `t_ij(u)` of a module, built through the iterated coproduct.
#[derive(Clone, Debug)]
pub struct Representation<T> {
    module: Module<T>,
    t: [[OperatorPoly<T>; 2]; 2],
}

impl<T: Coeff> Representation<T> {
    pub fn new(module: Module<T>) -> Self {
        let mut acc: Option<[[OperatorPoly<T>; 2]; 2]> = None;
        for slot in 0..module.num_factors() {
            let (a, b) = &module.weights()[slot];
            let dim = module.factor_dims()[slot];
            let dual = module.factors()[slot].is_dual();
            let local = |i: usize, j: usize| single_factor_action(a, b, dim, dual, i, j);
            let factor = [[local(1, 1), local(1, 2)], [local(2, 1), local(2, 2)]];
            acc = Some(match acc {
                None => factor,
                Some(prev) => {
                    // Δ t_ij = Σ_k t_ik ⊗ t_kj
                    let entry = |i: usize, j: usize| {
                        prev[i][0].kron(&factor[0][j]).add(&prev[i][1].kron(&factor[1][j]))
                    };
                    [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
                }
            });
        }
        let t = acc.unwrap_or_else(|| {
            let id = OperatorPoly::identity(1);
            let z = OperatorPoly::zero(1);
            [[id.clone(), z.clone()], [z, id]]
        });
        Representation { module, t }
    }

    pub fn module(&self) -> &Module<T> {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// `t_ij(u)` with 1-based indices.
    pub fn t(&self, i: usize, j: usize) -> &OperatorPoly<T> {
        assert!((1..=2).contains(&i) && (1..=2).contains(&j), "indices must be 1 or 2");
        &self.t[i - 1][j - 1]
    }

    /// `t_ij^{(r)}`.
    pub fn t_coeff(&self, i: usize, j: usize, r: usize) -> Matrix<T> {
        self.t(i, j).coeff(r)
    }

    /// Every nonzero coefficient matrix `t_ij^{(r)}`, `r ≥ 1`, tagged by `(i, j, r)`.
    pub fn generator_matrices(&self) -> Vec<((usize, usize, usize), Matrix<T>)> {
        let mut out = Vec::new();
        for i in 1..=2 {
            for j in 1..=2 {
                for r in 1..=self.t(i, j).degree() {
                    out.push(((i, j, r), self.t_coeff(i, j, r)));
                }
            }
        }
        out
    }

    /// Numerator of the quantum determinant over the denominator `u^n (u−1)^n`.
    pub fn qdet(&self) -> QdetSeries<T> {
        let n = self.module.num_factors();
        let minus_one = -Scalar::one();
        let p = |i, j| self.t(i, j).cleared(n);
        let num = p(1, 1)
            .mul(&p(2, 2).shift(&minus_one))
            .sub(&p(2, 1).mul(&p(1, 2).shift(&minus_one)));
        QdetSeries { n, numerator: num }
    }

    /// `c11 t11 + c12 t21 + c21 t12 + c22 t22` for `C = [[c11, c12], [c21, c22]]`.
    pub fn trace(&self, c: &[[Scalar; 2]; 2]) -> OperatorPoly<T> {
        let terms = [
            (&c[0][0], self.t(1, 1)),
            (&c[0][1], self.t(2, 1)),
            (&c[1][0], self.t(1, 2)),
            (&c[1][1], self.t(2, 2)),
        ];
        let mut acc = OperatorPoly::zero(self.dim());
        for (coef, series) in terms {
            if !coef.is_zero() {
                acc = acc.add(&series.scale(&T::from_scalar(coef.clone())));
            }
        }
        acc
    }

    /// `ω = ef + fe + h²/2` for the embedded gl2 (`e = t12^{(1)}`, `f = t21^{(1)}`).
    pub fn casimir(&self) -> Matrix<T> {
        let e = self.t_coeff(1, 2, 1);
        let f = self.t_coeff(2, 1, 1);
        let h = self.t_coeff(1, 1, 1).sub(&self.t_coeff(2, 2, 1));
        let half = T::from_scalar(scalar::ratio(1, 2));
        e.mul(&f).add(&f.mul(&e)).add(&h.mul(&h).scale(&half))
    }
}

/// `qdet T(u) = N(u) / (u^n (u−1)^n)`.
#[derive(Clone, Debug)]
pub struct QdetSeries<T> {
    pub n: usize,
    pub numerator: MatPoly<T>,
}

impl<T: Coeff> QdetSeries<T> {
    /// Coefficients of `N(u)` below the leading identity term.
    pub fn lower_coeffs(&self) -> Vec<Matrix<T>> {
        let num = &self.numerator;
        (0..2 * self.n).map(|k| num.coeff(k)).collect()
    }
}

/// `t_ij(u)` on the module (fresh computation; prefer [`Representation`] for repeated use).
pub fn generator_series<T: Coeff>(m: &Module<T>, i: usize, j: usize) -> OperatorPoly<T> {
    Representation::new(m.clone()).t(i, j).clone()
}

pub fn qdet_series<T: Coeff>(m: &Module<T>) -> QdetSeries<T> {
    Representation::new(m.clone()).qdet()
}

pub fn trace_series<T: Coeff>(m: &Module<T>, c: &[[Scalar; 2]; 2]) -> OperatorPoly<T> {
    Representation::new(m.clone()).trace(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::scalar::int;
    use crate::exactring::ScalarMatrix;

    fn rep(factors: &[(i64, i64)]) -> Representation<Scalar> {
        let m = Module::new(factors.iter().map(|&(a, b)| FactorSpec::irrep_int(a, b)).collect()).unwrap();
        Representation::new(m)
    }

    #[test]
    fn primitive_part_of_coproduct() {
        let r = rep(&[(1, 0), (1, 0)]);
        let m = r.module();
        let f = |s| m.embed(s, &m.factor_gl2(s, 2, 1));
        assert_eq!(r.t_coeff(2, 1, 1), f(0).add(&f(1)));
        assert!(r.t(2, 1).degree() <= 2);
    }

    #[test]
    fn single_factor_qdet() {
        // N(u) = (u + a)(u + b - 1)
        let r = rep(&[(3, 1)]);
        let q = r.qdet();
        let id = ScalarMatrix::identity(3);
        assert_eq!(q.numerator.coeff(2), id);
        assert_eq!(q.numerator.coeff(1), id.scale(&int(3)));
        assert_eq!(q.numerator.coeff(0), ScalarMatrix::zeros(3, 3));
        let triv = rep(&[(0, 0)]).qdet();
        assert_eq!(triv.numerator.coeff(1), ScalarMatrix::identity(1).scale(&int(-1)));
    }

    #[test]
    fn shift_matches_evaluation() {
        let r = rep(&[(2, 0), (1, 0)]);
        let p = r.t(1, 2).cleared(2);
        let shifted = p.shift(&int(-1));
        assert_eq!(shifted.eval(&int(5)), p.eval(&int(4)));
    }

    #[test]
    fn trace_with_diag_on_spin_half() {
        let r = rep(&[(1, 0)]);
        let c = [[int(1), int(0)], [int(0), int(0)]];
        let cleared = r.trace(&c).cleared(1);
        // u·t11(u) = [[u+1, 0], [0, u]]
        assert_eq!(cleared.coeff(1), ScalarMatrix::identity(2));
        assert_eq!(cleared.coeff(0), ScalarMatrix::from_diagonal(vec![int(1), int(0)]));
    }
}
