//! The matrix `𝒟_m` expressing `t21`-monomials on the highest-weight vector in the weight basis.

use crate::exactring::{Coeff, MultiPoly, PolyMatrix, PolyRing};
use crate::yangrep::{Module, Representation};

use super::ShapError;

/// Compositions of `m` into `n` nonnegative parts, in decreasing lexicographic order.
pub fn compositions(n: usize, m: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return if m == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=m).rev() {
        for mut rest in compositions(n - 1, m - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Clone, Debug)]
pub struct ShapMatrix {
    pub n: usize,
    pub m: usize,
    /// Weight-basis tuples `(k'_1, …, k'_n)` labelling rows.
    pub rows: Vec<Vec<usize>>,
    /// Exponents `(k_1, …, k_n)` of `(t21^{(1)})^{k_1} ⋯ (t21^{(n)})^{k_n}` labelling columns.
    pub cols: Vec<Vec<usize>>,
    pub matrix: PolyMatrix,
    pub ring: PolyRing,
}

/// Symbolic `t21^{(r)}` matrices, `r = 1..=n`, on generic Verma factors truncated at `cutoff`.
pub fn symbolic_t21(n: usize, cutoff: usize) -> Result<(Representation<MultiPoly>, Vec<PolyMatrix>), ShapError> {
    let module = Module::generic_chain(n, cutoff)?;
    let rep = Representation::new(module);
    let mats = (1..=n).map(|r| rep.t_coeff(2, 1, r)).collect();
    Ok((rep, mats))
}

pub fn shap_matrix(n: usize, m: usize) -> Result<ShapMatrix, ShapError> {
    if n == 0 || m == 0 {
        return Err(ShapError::Range(format!("need n, m >= 1, got n={n}, m={m}")));
    }
    if 2 * n > crate::exactring::poly::MAX_VARS {
        return Err(ShapError::Range(format!("n={n} needs more variables than supported")));
    }
    let (rep, t21) = symbolic_t21(n, m)?;
    let module = rep.module();
    let ring = module.ring().expect("generic module has a ring").clone();
    let rows = compositions(n, m);
    let cols = compositions(n, m);
    let row_idx: Vec<usize> = rows.iter().map(|t| module.index_of(t).expect("row tuple in range")).collect();
    let mut columns = Vec::with_capacity(cols.len());
    for exps in &cols {
        let mut v = module.highest_weight_vector();
        for (r, &k) in exps.iter().enumerate() {
            for _ in 0..k {
                v = t21[r].mat_vec(&v);
            }
        }
        columns.push(row_idx.iter().map(|&i| v[i].clone()).collect::<Vec<_>>());
    }
    let size = rows.len();
    let matrix = PolyMatrix::from_fn(size, size, |i, j| columns[j][i].clone());
    Ok(ShapMatrix { n, m, rows, cols, matrix, ring })
}

impl ShapMatrix {
    /// Whether every entry of column `(k_1..k_n)` has total degree at most `Σ (i−1) k_i`.
    pub fn column_degrees_bounded(&self) -> bool {
        self.cols.iter().enumerate().all(|(j, exps)| {
            let bound: usize = exps.iter().enumerate().map(|(i, k)| i * k).sum();
            (0..self.matrix.rows()).all(|i| {
                let p = &self.matrix[(i, j)];
                p.is_zero_elt() || p.total_degree().unwrap_or(0) as usize <= bound
            })
        })
    }

    /// `Σ_cols Σ_i (i−1) k_i`, the upper bound on `deg D_m`.
    pub fn degree_bound(&self) -> usize {
        self.cols.iter().map(|e| e.iter().enumerate().map(|(i, k)| i * k).sum::<usize>()).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_order() {
        assert_eq!(compositions(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(compositions(3, 1).len(), 3);
        assert_eq!(compositions(1, 4), vec![vec![4]]);
    }

    #[test]
    fn two_factors_degree_one() {
        let s = shap_matrix(2, 1).unwrap();
        let r = &s.ring;
        let one = MultiPoly::one();
        assert_eq!(s.matrix[(0, 0)], one);
        assert_eq!(s.matrix[(1, 0)], one);
        assert_eq!(s.matrix[(0, 1)], r.var("a2").unwrap());
        assert_eq!(s.matrix[(1, 1)], r.var("b1").unwrap());
    }

    #[test]
    fn single_factor_is_constant() {
        let s = shap_matrix(1, 2).unwrap();
        assert_eq!(s.matrix.rows(), 1);
        assert_eq!(s.matrix[(0, 0)], MultiPoly::one());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(0, 0), 1);
    }
}
