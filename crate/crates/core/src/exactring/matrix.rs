//! Dense matrices over an exact coefficient type.

use std::fmt::Debug;
use std::ops::{Index, IndexMut};

use num_traits::{One, Signed, Zero};

use super::poly::{MultiPoly, PolyRing};
use super::scalar::Scalar;
use super::AlgebraError;

/// Exact coefficient ring: rationals or polynomials over them.
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync {
    fn zero_elt() -> Self;
    fn one_elt() -> Self;
    fn is_zero_elt(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_scalar(s: Scalar) -> Self;
    fn div_exact(&self, d: &Self) -> Result<Self, AlgebraError>;
    /// Rough size, used to prefer cheap pivots.
    fn weight(&self) -> usize;
}

impl Coeff for Scalar {
    fn zero_elt() -> Self {
        Zero::zero()
    }
    fn one_elt() -> Self {
        One::one()
    }
    fn is_zero_elt(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_scalar(s: Scalar) -> Self {
        s
    }
    fn div_exact(&self, d: &Self) -> Result<Self, AlgebraError> {
        if Zero::is_zero(d) {
            Err(AlgebraError::DivisionByZero)
        } else {
            Ok(self / d)
        }
    }
    fn weight(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

impl Coeff for MultiPoly {
    fn zero_elt() -> Self {
        MultiPoly::zero()
    }
    fn one_elt() -> Self {
        MultiPoly::one()
    }
    fn is_zero_elt(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_scalar(s: Scalar) -> Self {
        MultiPoly::constant(s)
    }
    fn div_exact(&self, d: &Self) -> Result<Self, AlgebraError> {
        MultiPoly::div_exact(self, d)
    }
    fn weight(&self) -> usize {
        self.num_terms()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type ScalarMatrix = Matrix<Scalar>;
pub type PolyMatrix = Matrix<MultiPoly>;

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Coeff> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero_elt(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one_elt();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, AlgebraError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(AlgebraError::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_diagonal(diag: Vec<T>) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, d) in diag.into_iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    /// Column vector.
    pub fn column_vector(v: Vec<T>) -> Self {
        Matrix { rows: v.len(), cols: 1, data: v }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Coeff::is_zero_elt)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<U: Coeff, E>(&self, f: impl Fn(&T) -> Result<U, E>) -> Result<Matrix<U>, E> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>, E>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    fn same_shape(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add_ref(b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.sub_ref(b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.cols != other.rows {
            return Err(AlgebraError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero_elt() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero_elt() {
                        let cur = &mut out[(i, j)];
                        *cur = cur.add_ref(&a.mul_ref(b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("matrix shapes differ")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("matrix shapes differ")
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("matrix shapes incompatible")
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.mul_ref(c))
    }

    pub fn neg(&self) -> Self {
        self.map(Coeff::neg_ref)
    }

    pub fn mat_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero_elt();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero_elt() && !x.is_zero_elt() {
                        acc = acc.add_ref(&a.mul_ref(x));
                    }
                }
                acc
            })
            .collect()
    }

    /// `self ⊗ other` with the first factor as the slow index.
    pub fn kron(&self, other: &Self) -> Self {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Self::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero_elt() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = &other[(k, l)];
                        if !b.is_zero_elt() {
                            out[(i * other.rows + k, j * other.cols + l)] = a.mul_ref(b);
                        }
                    }
                }
            }
        }
        out
    }

    /// `self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.mul(other) == other.mul(self)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn trace(&self) -> T {
        let mut acc = T::zero_elt();
        for i in 0..self.rows.min(self.cols) {
            acc = acc.add_ref(&self[(i, i)]);
        }
        acc
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    /// Fraction-free (Bareiss) determinant. Row swaps pick the lightest nonzero pivot.
    pub fn det(&self) -> Result<T, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(T::one_elt());
        }
        let mut a = self.clone();
        let mut prev = T::one_elt();
        let mut negate = false;
        for k in 0..n {
            let pivot = (k..n)
                .filter(|&i| !a[(i, k)].is_zero_elt())
                .min_by_key(|&i| a[(i, k)].weight());
            let Some(p) = pivot else {
                return Ok(T::zero_elt());
            };
            if p != k {
                for j in 0..n {
                    a.data.swap(p * n + j, k * n + j);
                }
                negate = !negate;
            }
            let pk = a[(k, k)].clone();
            for i in k + 1..n {
                let aik = a[(i, k)].clone();
                for j in k + 1..n {
                    let t = a[(i, j)].mul_ref(&pk).sub_ref(&aik.mul_ref(&a[(k, j)]));
                    a[(i, j)] = if k == 0 { t } else { t.div_exact(&prev)? };
                }
                a[(i, k)] = T::zero_elt();
            }
            prev = pk;
        }
        let d = a[(n - 1, n - 1)].clone();
        Ok(if negate { d.neg_ref() } else { d })
    }
}

impl Matrix<MultiPoly> {
    /// Entrywise evaluation at a named point.
    pub fn eval(
        &self,
        point: &std::collections::HashMap<String, Scalar>,
    ) -> Result<ScalarMatrix, AlgebraError> {
        self.try_map(|p| p.eval(point))
    }

    pub fn eval_at(&self, values: &[Scalar]) -> Result<ScalarMatrix, AlgebraError> {
        self.try_map(|p| p.eval_at(values))
    }

    /// Constant entries as a scalar matrix.
    pub fn to_scalar(&self) -> Result<ScalarMatrix, AlgebraError> {
        self.try_map(|p| p.as_constant().ok_or(AlgebraError::NotConstant))
    }
}

impl Matrix<Scalar> {
    pub fn to_poly(&self) -> PolyMatrix {
        self.map(|s| MultiPoly::constant(s.clone()))
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.data.iter().map(super::scalar::to_f64).collect()
    }

    pub fn inverse(&self) -> Result<ScalarMatrix, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::NotSquare { rows: self.rows, cols: self.cols });
        }
        super::linalg::inverse(self)
    }
}

/// Ascending coefficients of `det(x·I − M)` via Faddeev–LeVerrier.
pub fn char_poly_coeffs(m: &ScalarMatrix) -> Result<Vec<Scalar>, AlgebraError> {
    if !m.is_square() {
        return Err(AlgebraError::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut mk = ScalarMatrix::zeros(n, n);
    for k in 1..=n {
        let mut next = m.mul(&mk);
        for i in 0..n {
            next[(i, i)] += &coeffs[n - k + 1];
        }
        let am = m.mul(&next);
        coeffs[n - k] = -am.trace() / Scalar::from_integer((k as i64).into());
        mk = next;
    }
    Ok(coeffs)
}

/// Monic characteristic polynomial in the single variable `x`.
pub fn char_poly(m: &ScalarMatrix) -> Result<MultiPoly, AlgebraError> {
    let coeffs = char_poly_coeffs(m)?;
    let ring = PolyRing::new(["x"])?;
    Ok(ring.univariate(0, &coeffs))
}

/// For a real-rooted monic polynomial: every root is positive iff the coefficients strictly
/// alternate in sign.
pub fn all_roots_positive_coeffs(coeffs: &[Scalar]) -> Result<bool, AlgebraError> {
    let n = coeffs.len().saturating_sub(1);
    if coeffs.first().is_some_and(Zero::is_zero) && n > 0 {
        return Err(AlgebraError::ZeroEigenvalue);
    }
    Ok(coeffs.iter().enumerate().all(|(k, c)| {
        if (n - k) % 2 == 0 {
            c.is_positive()
        } else {
            c.is_negative()
        }
    }))
}

pub fn all_roots_positive(p: &MultiPoly) -> Result<bool, AlgebraError> {
    let vars = p.var_names().map_or(0, |v| v.len());
    if vars > 1 {
        return Err(AlgebraError::TooManyVariables(vars));
    }
    let coeffs = p.univariate_coeffs(0).ok_or(AlgebraError::TooManyVariables(vars))?;
    all_roots_positive_coeffs(&coeffs)
}

/// Sylvester criterion: all leading principal minors of a symmetric matrix are positive.
pub fn principal_minors_positive(g: &ScalarMatrix) -> Result<bool, AlgebraError> {
    if !g.is_square() {
        return Err(AlgebraError::NotSquare { rows: g.rows, cols: g.cols });
    }
    if !g.is_symmetric() {
        return Err(AlgebraError::NotSymmetric);
    }
    // without row exchanges, the k-th pivot is the ratio of consecutive leading minors
    let n = g.rows;
    let mut a = g.clone();
    for k in 0..n {
        let p = a[(k, k)].clone();
        if !p.is_positive() {
            return Ok(false);
        }
        for i in k + 1..n {
            let f = &a[(i, k)] / &p;
            if Zero::is_zero(&f) {
                continue;
            }
            for j in k..n {
                let t = &f * &a[(k, j)];
                a[(i, j)] -= t;
            }
        }
    }
    Ok(true)
}

/// All leading principal minors, in order.
pub fn leading_minors(g: &ScalarMatrix) -> Result<Vec<Scalar>, AlgebraError> {
    if !g.is_square() {
        return Err(AlgebraError::NotSquare { rows: g.rows, cols: g.cols });
    }
    (1..=g.rows)
        .map(|k| {
            let idx: Vec<usize> = (0..k).collect();
            g.submatrix(&idx, &idx).det()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::scalar::{int, ratio};

    fn smat(rows: &[&[i64]]) -> ScalarMatrix {
        ScalarMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn two_by_two_symbolic() {
        let r = PolyRing::new(["a", "b", "c", "d"]).unwrap();
        let v = |n: &str| r.var(n).unwrap();
        let m = PolyMatrix::from_rows(vec![vec![v("a"), v("b")], vec![v("c"), v("d")]]).unwrap();
        assert_eq!(m.det().unwrap(), &(&v("a") * &v("d")) - &(&v("b") * &v("c")));
        assert_eq!(PolyMatrix::identity(4).det().unwrap(), MultiPoly::one());
    }

    #[test]
    fn vandermonde() {
        let r = PolyRing::new(["a1", "a2", "a3"]).unwrap();
        let a: Vec<MultiPoly> = (0..3).map(|i| r.var_at(i)).collect();
        let m = PolyMatrix::from_fn(3, 3, |i, j| a[i].pow(j as u32));
        let expected = &(&(&a[1] - &a[0]) * &(&a[2] - &a[0])) * &(&a[2] - &a[1]);
        assert_eq!(m.det().unwrap(), expected);
    }

    #[test]
    fn non_square_det_is_an_error() {
        let m = ScalarMatrix::zeros(2, 3);
        assert_eq!(m.det().unwrap_err(), AlgebraError::NotSquare { rows: 2, cols: 3 });
    }

    #[test]
    fn char_polys() {
        let x = |c: &[i64]| c.iter().map(|&v| int(v)).collect::<Vec<_>>();
        assert_eq!(char_poly_coeffs(&smat(&[&[1, 0], &[0, 2]])).unwrap(), x(&[2, -3, 1]));
        assert_eq!(char_poly_coeffs(&smat(&[&[0, 1], &[1, 0]])).unwrap(), x(&[-1, 0, 1]));
        assert_eq!(char_poly_coeffs(&smat(&[&[0, 1], &[0, 0]])).unwrap(), x(&[0, 0, 1]));
        assert_eq!(char_poly(&smat(&[&[0, 1], &[1, 0]])).unwrap().to_string(), "x^2 - 1");
    }

    #[test]
    fn root_positivity() {
        assert!(all_roots_positive_coeffs(&[int(2), int(-3), int(1)]).unwrap());
        assert!(!all_roots_positive_coeffs(&[int(-1), int(0), int(1)]).unwrap());
        assert_eq!(
            all_roots_positive_coeffs(&[int(0), int(-1), int(1)]).unwrap_err(),
            AlgebraError::ZeroEigenvalue
        );
        // eigenvalues 1/2 and 3/2
        assert!(all_roots_positive_coeffs(&[ratio(3, 4), int(-2), int(1)]).unwrap());
    }

    #[test]
    fn sylvester() {
        assert!(principal_minors_positive(&ScalarMatrix::identity(3)).unwrap());
        assert!(!principal_minors_positive(&smat(&[&[1, 0], &[0, -1]])).unwrap());
        assert!(principal_minors_positive(&smat(&[&[2, 1], &[1, 2]])).unwrap());
        assert!(!principal_minors_positive(&smat(&[&[1, 2], &[2, 1]])).unwrap());
        assert_eq!(
            principal_minors_positive(&smat(&[&[1, 2], &[0, 1]])).unwrap_err(),
            AlgebraError::NotSymmetric
        );
    }

    #[test]
    fn kron_shapes() {
        let a = smat(&[&[1, 2], &[3, 4]]);
        let i = ScalarMatrix::identity(2);
        let k = a.kron(&i);
        assert_eq!(k[(0, 2)], int(2));
        assert_eq!(k[(3, 1)], int(3));
        assert_eq!(i.kron(&a)[(1, 0)], int(3));
    }
}
