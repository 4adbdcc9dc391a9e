//! The product formula for `D_m = det 𝒟_m` and its verification.

use std::collections::HashMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::exactring::scalar::{self, Scalar};
use crate::exactring::{MultiPoly, PolyRing};

use super::matrix::{binomial, compositions, shap_matrix, ShapMatrix};
use super::ShapError;

/// Largest matrix size for which the symbolic determinant is attempted.
pub const SYMBOLIC_MAX_SIZE: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DetMode {
    Symbolic,
    Interpolated,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaFactor {
    pub i: usize,
    pub j: usize,
    pub l: usize,
    pub exponent: u32,
}

/// `∏_{l<m} ∏_{j<i} (a_i − b_j − l)^{C(m+n−l−2, n−1)}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ShapFormula {
    pub n: usize,
    pub m: usize,
    pub factors: Vec<FormulaFactor>,
}

impl ShapFormula {
    pub fn new(n: usize, m: usize) -> Self {
        let mut factors = Vec::new();
        for l in 0..m {
            let exponent = binomial((m + n - l - 2) as u64, (n - 1) as u64) as u32;
            for i in 1..=n {
                for j in 1..i {
                    factors.push(FormulaFactor { i, j, l, exponent });
                }
            }
        }
        ShapFormula { n, m, factors }
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(|f| f.exponent as usize).sum()
    }

    /// `C(n,2) · C(n+m−1, n)`.
    pub fn closed_form_degree(n: usize, m: usize) -> usize {
        (binomial(n as u64, 2) * binomial((n + m - 1) as u64, n as u64)) as usize
    }

    /// The linear form `a_i − b_j − l` in the ring `a1,b1,…,an,bn`.
    pub fn linear_factor(ring: &PolyRing, i: usize, j: usize, l: usize) -> MultiPoly {
        let a = ring.var_at(2 * (i - 1));
        let b = ring.var_at(2 * (j - 1) + 1);
        &(&a - &b) - &MultiPoly::constant(scalar::int(l as i64))
    }

    pub fn as_poly(&self, ring: &PolyRing) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for f in &self.factors {
            acc = &acc * &Self::linear_factor(ring, f.i, f.j, f.l).pow(f.exponent);
        }
        acc
    }

    /// Value at `values = [a1, b1, …, an, bn]`.
    pub fn eval(&self, values: &[Scalar]) -> Scalar {
        let mut acc = Scalar::one();
        for f in &self.factors {
            let x = &values[2 * (f.i - 1)] - &values[2 * (f.j - 1) + 1] - scalar::int(f.l as i64);
            acc *= num_traits::pow(x, f.exponent as usize);
        }
        acc
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ShapReport {
    pub n: usize,
    pub m: usize,
    pub mode: DetMode,
    #[serde(rename = "match")]
    pub matches: bool,
    #[serde(with = "scalar::serde_text")]
    pub constant: Scalar,
    pub degree_expected: usize,
    pub degree_found: usize,
    pub degree_ok: bool,
    /// Exact evaluation agreements beyond the fitting point (interpolated mode).
    pub agreements: usize,
    pub factors: Vec<FormulaFactor>,
}

/// Result of [`shap_det`].
#[derive(Clone, Debug)]
pub enum ShapDet {
    Symbolic(MultiPoly),
    Interpolated(ShapReport),
}

pub fn shap_det(n: usize, m: usize, mode: DetMode) -> Result<ShapDet, ShapError> {
    let s = shap_matrix(n, m)?;
    match mode {
        DetMode::Symbolic => Ok(ShapDet::Symbolic(symbolic_det(&s)?)),
        DetMode::Interpolated => Ok(ShapDet::Interpolated(interpolated_report(&s, 0x5eed)?)),
    }
}

fn symbolic_det(s: &ShapMatrix) -> Result<MultiPoly, ShapError> {
    if s.matrix.rows() > SYMBOLIC_MAX_SIZE {
        return Err(ShapError::Budget { size: s.matrix.rows(), max: SYMBOLIC_MAX_SIZE });
    }
    Ok(s.matrix.det()?)
}

fn random_rational(rng: &mut ChaCha8Rng) -> Scalar {
    let num: i64 = rng.gen_range(-60..=60);
    let den: i64 = rng.gen_range(1..=9);
    scalar::ratio(num, den)
}

fn random_point(rng: &mut ChaCha8Rng, vars: usize) -> Vec<Scalar> {
    (0..vars).map(|_| random_rational(rng)).collect()
}

/// Determinant of `𝒟_m` evaluated at a numeric point.
pub fn det_at(s: &ShapMatrix, values: &[Scalar]) -> Result<Scalar, ShapError> {
    Ok(s.matrix.eval_at(values)?.det()?)
}

/// Degree of `D_m` read off its restriction to a random line, by exact Newton interpolation.
fn degree_along_line(s: &ShapMatrix, rng: &mut ChaCha8Rng) -> Result<usize, ShapError> {
    let vars = 2 * s.n;
    let base = random_point(rng, vars);
    let dir = random_point(rng, vars);
    let samples = s.degree_bound() + 2;
    let ts: Vec<Scalar> = (0..samples).map(|k| scalar::int(k as i64)).collect();
    let mut table: Vec<Scalar> = Vec::with_capacity(samples);
    for t in &ts {
        let pt: Vec<Scalar> = base.iter().zip(&dir).map(|(b, d)| b + d * t).collect();
        table.push(det_at(s, &pt)?);
    }
    // divided differences; the last nonzero one gives the degree
    let mut coeffs = table.clone();
    for level in 1..samples {
        for k in (level..samples).rev() {
            coeffs[k] = (&coeffs[k] - &coeffs[k - 1]) / (&ts[k] - &ts[k - level]);
        }
    }
    Ok(coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(0))
}

fn interpolated_report(s: &ShapMatrix, seed: u64) -> Result<ShapReport, ShapError> {
    let formula = ShapFormula::new(s.n, s.m);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vars = 2 * s.n;
    let mut constant = None;
    let mut agreements = 0;
    let mut mismatch = false;
    let needed = 12;
    let mut attempts = 0;
    while agreements < needed && attempts < 200 {
        attempts += 1;
        let pt = random_point(&mut rng, vars);
        let f = formula.eval(&pt);
        if f.is_zero() {
            continue;
        }
        let d = det_at(s, &pt)?;
        match &constant {
            None => constant = Some(d / f),
            Some(c) => {
                if d == c * &f {
                    agreements += 1;
                } else {
                    mismatch = true;
                    break;
                }
            }
        }
    }
    let constant = constant.unwrap_or_else(Scalar::zero);
    let degree_found = degree_along_line(s, &mut rng)?;
    let degree_expected = ShapFormula::closed_form_degree(s.n, s.m);
    Ok(ShapReport {
        n: s.n,
        m: s.m,
        mode: DetMode::Interpolated,
        matches: !mismatch && !constant.is_zero() && agreements >= 10,
        constant,
        degree_expected,
        degree_found,
        degree_ok: degree_found == degree_expected && formula.degree() == degree_expected,
        agreements,
        factors: formula.factors,
    })
}

/// Compares `D_m` with the product formula up to a constant.
pub fn verify_shap_formula(n: usize, m: usize, mode: DetMode) -> Result<ShapReport, ShapError> {
    let s = shap_matrix(n, m)?;
    match mode {
        DetMode::Interpolated => interpolated_report(&s, 0x5eed ^ ((n as u64) << 8) ^ m as u64),
        DetMode::Symbolic => {
            let det = symbolic_det(&s)?;
            let formula = ShapFormula::new(n, m);
            let target = formula.as_poly(&s.ring);
            let (matches, constant) = match det.div_exact(&target) {
                Ok(q) => match q.as_constant() {
                    Some(c) if !c.is_zero() => (true, c),
                    _ => (false, Scalar::zero()),
                },
                Err(_) => (false, Scalar::zero()),
            };
            let degree_found = det.total_degree().unwrap_or(0) as usize;
            let degree_expected = ShapFormula::closed_form_degree(n, m);
            Ok(ShapReport {
                n,
                m,
                mode,
                matches,
                constant,
                degree_expected,
                degree_found,
                degree_ok: degree_found == degree_expected && formula.degree() == degree_expected,
                agreements: 0,
                factors: formula.factors,
            })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CascadeResult {
    /// `C(m+n−k−2, n−1)` when `k < m`; `None` when the factor is not part of the product.
    pub expected: Option<u32>,
    pub multiplicity: u32,
    pub holds: bool,
}

/// Multiplicity of `(a_i − b_j − k)` in `D_m` against the exponent in the product formula.
pub fn divisibility_cascade_check(det: &MultiPoly, ring: &PolyRing, n: usize, m: usize, i: usize, j: usize, k: usize) -> Result<CascadeResult, ShapError> {
    if !(1 <= j && j < i && i <= n) {
        return Err(ShapError::Range(format!("need 1 <= j < i <= n, got i={i}, j={j}")));
    }
    let factor = ShapFormula::linear_factor(ring, i, j, k);
    let multiplicity = det.multiplicity_of(&factor)?;
    if k >= m {
        return Ok(CascadeResult { expected: None, multiplicity, holds: false });
    }
    let expected = binomial((m + n - k - 2) as u64, (n - 1) as u64) as u32;
    Ok(CascadeResult { expected: Some(expected), multiplicity, holds: multiplicity >= expected })
}

/// `Σ_{|k|=m} Σ_i (i−1) k_i` by enumeration.
pub fn column_degree_sum(n: usize, m: usize) -> usize {
    compositions(n, m)
        .iter()
        .map(|c| c.iter().enumerate().map(|(i, k)| i * k).sum::<usize>())
        .sum()
}

/// Named point `a{i} ↦ values[2i−2]`, `b{i} ↦ values[2i−1]`.
pub fn named_point(values: &[Scalar]) -> HashMap<String, Scalar> {
    let mut out = HashMap::new();
    for (k, v) in values.iter().enumerate() {
        let name = if k % 2 == 0 { format!("a{}", k / 2 + 1) } else { format!("b{}", k / 2 + 1) };
        out.insert(name, v.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::scalar::int;

    #[test]
    fn two_factor_degree_one() {
        let r = verify_shap_formula(2, 1, DetMode::Symbolic).unwrap();
        assert!(r.matches);
        assert_eq!(r.constant, int(-1));
        assert_eq!(r.degree_found, 1);
    }

    #[test]
    fn formula_exponents() {
        let f = ShapFormula::new(3, 2);
        let exps: Vec<u32> = f.factors.iter().map(|x| x.exponent).collect();
        assert_eq!(exps, vec![3, 3, 3, 1, 1, 1]);
        assert_eq!(f.degree(), 12);
        assert_eq!(ShapFormula::closed_form_degree(2, 3), 6);
    }

    #[test]
    fn binomial_sum_identity() {
        for n in 1..=5 {
            for m in 1..=6 {
                assert_eq!(column_degree_sum(n, m), ShapFormula::closed_form_degree(n, m), "n={n} m={m}");
            }
        }
    }
}
