//! Exact linear algebra over the rationals: rank, kernels, solving, incremental spans.

use num_traits::{One, Zero};

use super::matrix::ScalarMatrix;
use super::scalar::Scalar;
use super::AlgebraError;

/// Reduced row echelon form; returns the pivot columns.
pub fn rref(m: &mut ScalarMatrix) -> Vec<usize> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                let t = m[(p, j)].clone();
                m[(p, j)] = m[(r, j)].clone();
                m[(r, j)] = t;
            }
        }
        let inv = m[(r, c)].recip();
        for j in c..cols {
            m[(r, j)] *= &inv;
        }
        for i in 0..rows {
            if i == r || m[(i, c)].is_zero() {
                continue;
            }
            let f = m[(i, c)].clone();
            for j in c..cols {
                let t = &f * &m[(r, j)];
                m[(i, j)] -= t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &ScalarMatrix) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// Basis of `{x : m·x = 0}`.
pub fn nullspace(m: &ScalarMatrix) -> Vec<Vec<Scalar>> {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let cols = m.cols();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); cols];
            v[f] = Scalar::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -a[(r, f)].clone();
            }
            v
        })
        .collect()
}

/// Some solution of `m·x = b`, or `None` when inconsistent.
pub fn solve(m: &ScalarMatrix, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, AlgebraError> {
    if b.len() != m.rows() {
        return Err(AlgebraError::DimensionMismatch("right-hand side length".into()));
    }
    let cols = m.cols();
    let mut aug = ScalarMatrix::from_fn(m.rows(), cols + 1, |i, j| {
        if j < cols {
            m[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return Ok(None);
    }
    let mut x = vec![Scalar::zero(); cols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = aug[(r, cols)].clone();
    }
    Ok(Some(x))
}

pub fn inverse(m: &ScalarMatrix) -> Result<ScalarMatrix, AlgebraError> {
    let n = m.rows();
    let mut aug = ScalarMatrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m[(i, j)].clone()
        } else if j - n == i {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    });
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return Err(AlgebraError::DivisionByZero);
    }
    Ok(ScalarMatrix::from_fn(n, n, |i, j| aug[(i, j + n)].clone()))
}

/// Incrementally grown subspace of `Q^dim`, kept in echelon form.
#[derive(Clone, Debug)]
pub struct Span {
    dim: usize,
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl Span {
    pub fn new(dim: usize) -> Self {
        Span { dim, rows: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    /// Remainder of `v` after elimination against the stored rows.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.dim, "vector length");
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            if w[*p].is_zero() {
                continue;
            }
            let f = w[*p].clone();
            for (x, r) in w.iter_mut().zip(row).skip(*p) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v`; returns whether the span grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].recip();
        for x in w.iter_mut().skip(p) {
            *x *= &inv;
        }
        self.rows.push((p, w));
        true
    }

    pub fn basis(&self) -> impl Iterator<Item = &[Scalar]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::scalar::int;

    fn smat(rows: &[&[i64]]) -> ScalarMatrix {
        ScalarMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn rank_and_kernel() {
        let m = smat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&m), 2);
        let ker = nullspace(&m);
        assert_eq!(ker.len(), 1);
        assert!(m.mat_vec(&ker[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn solving() {
        let m = smat(&[&[2, 1], &[1, 3]]);
        let x = solve(&m, &[int(3), int(4)]).unwrap().unwrap();
        assert_eq!(x, vec![int(1), int(1)]);
        let s = smat(&[&[1, 1], &[1, 1]]);
        assert!(solve(&s, &[int(1), int(2)]).unwrap().is_none());
        let inv = m.inverse().unwrap();
        assert_eq!(inv.mul(&m), ScalarMatrix::identity(2));
        assert!(s.inverse().is_err());
    }

    #[test]
    fn span_growth() {
        let mut s = Span::new(3);
        assert!(s.insert(&[int(0), int(1), int(1)]));
        assert!(s.insert(&[int(1), int(1), int(0)]));
        assert!(!s.insert(&[int(1), int(2), int(1)]));
        assert!(s.contains(&[int(2), int(0), int(-2)]));
        assert!(s.insert(&[int(0), int(0), int(1)]));
        assert!(s.is_full());
    }
}
