//! Singular vectors in dual Verma tensors and the elementary-symmetric `K` matrix.

use crate::exactring::scalar::Scalar;
use crate::exactring::{rank, MultiPoly, PolyMatrix, PolyRing, ScalarMatrix};
use crate::yangrep::{FactorSpec, Module, Representation};

use super::matrix::symbolic_t21;
use super::ShapError;

/// Dimension of the joint kernel of all `t12^{(r)}` on the degree-`m` part of
/// `M^∨(a2,b2) ⊗ M^∨(a1,b1)`.
pub fn singular_space(a2: &Scalar, b2: &Scalar, a1: &Scalar, b1: &Scalar, m: usize, cutoff: usize) -> Result<usize, ShapError> {
    if cutoff < m {
        return Err(ShapError::Range(format!("cutoff {cutoff} below degree {m}")));
    }
    let module = Module::new(vec![
        FactorSpec::dual_verma(a2.clone(), b2.clone(), cutoff),
        FactorSpec::dual_verma(a1.clone(), b1.clone(), cutoff),
    ])?;
    let cols: Vec<usize> = (0..module.dim()).filter(|&i| module.level(i) == m).collect();
    let rep = Representation::new(module);
    let degree = rep.t(1, 2).degree();
    let blocks: Vec<ScalarMatrix> = (1..=degree)
        .map(|r| {
            let t = rep.t_coeff(1, 2, r);
            let all_rows: Vec<usize> = (0..t.rows()).collect();
            t.submatrix(&all_rows, &cols)
        })
        .collect();
    let rows: Vec<Vec<Scalar>> = blocks.iter().flat_map(|b| (0..b.rows()).map(|i| b.row(i).to_vec())).collect();
    if rows.is_empty() {
        return Ok(cols.len());
    }
    let stacked = ScalarMatrix::from_rows(rows)?;
    Ok(cols.len() - rank(&stacked))
}

/// Elementary symmetric polynomial `e_k` of the given polynomials.
pub fn elementary_symmetric(xs: &[MultiPoly], k: usize) -> MultiPoly {
    // e_k via the recurrence over prefixes
    let mut e = vec![MultiPoly::one()];
    for x in xs {
        let mut next = e.clone();
        next.push(MultiPoly::zero());
        for j in 1..next.len() {
            next[j] = &e.get(j).cloned().unwrap_or_else(MultiPoly::zero) + &(&e[j - 1] * x);
        }
        e = next;
    }
    e.get(k).cloned().unwrap_or_else(MultiPoly::zero)
}

/// `K_ij = e_{j−1}(a_1, …, â_i, …, a_n)` over the ring `a1..an`.
pub fn k_matrix(n: usize) -> Result<(PolyMatrix, PolyRing), ShapError> {
    let ring = PolyRing::new((1..=n).map(|i| format!("a{i}")))?;
    let a: Vec<MultiPoly> = (0..n).map(|i| ring.var_at(i)).collect();
    let m = PolyMatrix::from_fn(n, n, |i, j| {
        let others: Vec<MultiPoly> = a.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, x)| x.clone()).collect();
        elementary_symmetric(&others, j)
    });
    Ok((m, ring))
}

pub fn k_matrix_det(n: usize) -> Result<MultiPoly, ShapError> {
    let (m, _) = k_matrix(n)?;
    Ok(m.det()?)
}

/// `∏_{i<j} (a_i − a_j)` in the ring of [`k_matrix`].
pub fn vandermonde_product(ring: &PolyRing) -> MultiPoly {
    let n = ring.len();
    let mut acc = MultiPoly::one();
    for i in 0..n {
        for j in i + 1..n {
            acc = &acc * &(&ring.var_at(i) - &ring.var_at(j));
        }
    }
    acc
}

/// Top-degree part of `t21^{(r)}` after identifying `b_i` with `a_i`, in the ring `a1..an`.
///
/// This is the operator `s^{r−1} t21^{(r)}` at `s = 0` on the line `(a/s, b + (1/s − 1)a)`.
pub fn leading_t21(n: usize, cutoff: usize, r: usize) -> Result<PolyMatrix, ShapError> {
    let (rep, t21) = symbolic_t21(n, cutoff)?;
    let ring2 = rep.module().ring().expect("generic ring").clone();
    let target = PolyRing::new((1..=n).map(|i| format!("a{i}")))?;
    let mask: Vec<bool> = (0..2 * n).map(|k| k % 2 == 0).collect();
    let degree = (r - 1) as u32;
    let m = &t21[r - 1];
    let out = m.try_map(|p| -> Result<MultiPoly, ShapError> {
        let mut q = p.clone();
        for i in 0..n {
            q = q.substitute(2 * i + 1, &ring2.var_at(2 * i))?;
        }
        let top = q.homogeneous_part(&mask, degree);
        // rename a_i (slot 2i in the doubled ring) into slot i of the target ring
        let mut acc = target.zero();
        for (mono, c) in top.terms() {
            let exps: Vec<u32> = (0..n).map(|i| mono.exponent(2 * i)).collect();
            acc = &acc + &target.monomial(&exps, c.clone())?;
        }
        Ok(acc)
    })?;
    Ok(out)
}

/// `Σ_i e_{r−1}(a without a_i) · (E21 in slot i)` in the ring `a1..an`.
pub fn expected_leading_t21(n: usize, cutoff: usize, r: usize) -> Result<PolyMatrix, ShapError> {
    let target = PolyRing::new((1..=n).map(|i| format!("a{i}")))?;
    let module = Module::generic_chain(n, cutoff)?;
    let a: Vec<MultiPoly> = (0..n).map(|i| target.var_at(i)).collect();
    let dim = module.dim();
    let mut acc = PolyMatrix::zeros(dim, dim);
    for i in 0..n {
        let others: Vec<MultiPoly> = a.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, x)| x.clone()).collect();
        let coeff = elementary_symmetric(&others, r - 1);
        let e21 = module.embed(i, &module.factor_gl2(i, 2, 1)).map(|p| {
            p.as_constant().map(MultiPoly::constant).expect("E21 has constant entries")
        });
        acc = acc.add(&e21.scale(&coeff));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::scalar::{int, ratio};

    #[test]
    fn k_matrix_small_cases() {
        assert_eq!(k_matrix_det(1).unwrap(), MultiPoly::one());
        let (_, ring) = k_matrix(2).unwrap();
        assert_eq!(k_matrix_det(2).unwrap(), &ring.var_at(0) - &ring.var_at(1));
    }

    #[test]
    fn singular_vector_criterion() {
        let z = int(0);
        // a2 - b1 = 2, m = 3
        assert_eq!(singular_space(&int(2), &z, &int(7), &z, 3, 3).unwrap(), 1);
        assert_eq!(singular_space(&ratio(1, 2), &z, &int(7), &z, 3, 3).unwrap(), 0);
        assert_eq!(singular_space(&int(0), &int(-3), &int(7), &z, 1, 2).unwrap(), 1);
    }
}
