//! Permutation and R-matrix operators on `(ℂ²)^{⊗n}` and ordered products of flipped R-matrices.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exactring::scalar::Scalar;
use crate::exactring::ScalarMatrix;

use super::UnitaryError;

/// Sign in `R(u) = 1 ± u⁻¹P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RSign {
    /// `R(u) = 1 − u⁻¹P`
    Minus,
    /// `R(u) = 1 + u⁻¹P`
    Plus,
}

impl RSign {
    fn factor(self) -> Scalar {
        match self {
            RSign::Minus => -Scalar::one(),
            RSign::Plus => Scalar::one(),
        }
    }
}

/// Which difference of adjacent site parameters is fed to `σ_{k,k+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ArgOrder {
    /// `c_left − c_right`
    LeftMinusRight,
    /// `c_right − c_left`
    RightMinusLeft,
}

impl ArgOrder {
    fn diff(self, left: &Scalar, right: &Scalar) -> Scalar {
        match self {
            ArgOrder::LeftMinusRight => left - right,
            ArgOrder::RightMinusLeft => right - left,
        }
    }
}

fn check_sites(n: usize, k: usize, l: usize) -> Result<(), UnitaryError> {
    if !(1 <= k && k < l && l <= n) {
        return Err(UnitaryError::Sites(format!("need 1 <= k < l <= n, got k={k}, l={l}, n={n}")));
    }
    if n > 16 {
        return Err(UnitaryError::Sites(format!("{n} sites is beyond the supported chain length")));
    }
    Ok(())
}

/// `P_kl` on `(ℂ²)^{⊗n}`, sites 1-based, site 1 the slowest tensor index.
pub fn perm_matrix(n: usize, k: usize, l: usize) -> Result<ScalarMatrix, UnitaryError> {
    check_sites(n, k, l)?;
    let dim = 1usize << n;
    let (bk, bl) = (n - k, n - l);
    let mut m = ScalarMatrix::zeros(dim, dim);
    for col in 0..dim {
        let (x, y) = ((col >> bk) & 1, (col >> bl) & 1);
        let row = if x == y { col } else { col ^ (1 << bk) ^ (1 << bl) };
        m[(row, col)] = Scalar::one();
    }
    Ok(m)
}

/// `R_kl(u) = 1 ± u⁻¹P_kl`.
pub fn r_matrix(n: usize, k: usize, l: usize, u: &Scalar, sign: RSign) -> Result<ScalarMatrix, UnitaryError> {
    if u.is_zero() {
        return Err(UnitaryError::ZeroArgument);
    }
    let p = perm_matrix(n, k, l)?;
    let c = sign.factor() / u;
    Ok(ScalarMatrix::identity(1 << n).add(&p.scale(&c)))
}

/// `σ_{k,k+1}(u) = P_{k,k+1} R_{k,k+1}(u) = P_{k,k+1} ± u⁻¹`.
pub fn sigma(n: usize, k: usize, u: &Scalar, sign: RSign) -> Result<ScalarMatrix, UnitaryError> {
    if u.is_zero() {
        return Err(UnitaryError::ZeroArgument);
    }
    let p = perm_matrix(n, k, k + 1)?;
    let c = sign.factor() / u;
    Ok(p.add(&ScalarMatrix::identity(1 << n).scale(&c)))
}

/// Applies adjacent flips `σ_{k+1,k+2}` for `k` in `word` (first entry acts first), each with the
/// difference of the parameters currently sitting at the two positions.
///
/// Returns the product and the final parameter arrangement.
pub fn word_product(
    params: &[Scalar],
    word: &[usize],
    sign: RSign,
    order: ArgOrder,
) -> Result<(ScalarMatrix, Vec<Scalar>), UnitaryError> {
    let n = params.len();
    let mut current = params.to_vec();
    let mut acc = ScalarMatrix::identity(1 << n);
    for &k in word {
        if k + 1 >= n {
            return Err(UnitaryError::Sites(format!("flip at position {k} on {n} sites")));
        }
        let x = order.diff(&current[k], &current[k + 1]);
        acc = sigma(n, k + 1, &x, sign)?.mul(&acc);
        current.swap(k, k + 1);
    }
    Ok((acc, current))
}

/// The reduced word `σ12(a1−a2)` first, then `σ23(a1−a3)`, …, moving site 1 to the end, then
/// site 2, and so on.
pub fn reversal_word(n: usize) -> Vec<usize> {
    let mut word = Vec::new();
    for l in 1..n {
        for k in 1..=n - l {
            word.push(k - 1);
        }
    }
    word
}

/// Another reduced word for the reversal: the last site is moved to the front first.
pub fn reversal_word_alt(n: usize) -> Vec<usize> {
    let mut word = Vec::new();
    for l in 1..n {
        for k in (l..n).rev() {
            word.push(k - 1);
        }
    }
    word
}

/// `σ^R(a_1,…,a_n) = ∏^← ∏^← σ_{k,k+1}(a_l − a_{l+k})`.
pub fn sigma_chain(a: &[Scalar], sign: RSign) -> Result<ScalarMatrix, UnitaryError> {
    Ok(word_product(a, &reversal_word(a.len()), sign, ArgOrder::LeftMinusRight)?.0)
}

/// `∏^←_l ∏^←_k R_{l,l+k}(x)` with `x = a_l − a_{l+k}` or its negative, per `order`.
pub fn r_chain(a: &[Scalar], sign: RSign, order: ArgOrder) -> Result<ScalarMatrix, UnitaryError> {
    let n = a.len();
    let mut acc = ScalarMatrix::identity(1 << n);
    for l in 1..n {
        for k in 1..=n - l {
            let x = order.diff(&a[l - 1], &a[l + k - 1]);
            acc = r_matrix(n, l, l + k, &x, sign)?.mul(&acc);
        }
    }
    Ok(acc)
}

/// `R12(u) R13(u+v) R23(v) = R23(v) R13(u+v) R12(u)` on three sites.
pub fn ybe_holds(u: &Scalar, v: &Scalar, sign: RSign) -> Result<bool, UnitaryError> {
    let w = u + v;
    let r = |k, l, x: &Scalar| r_matrix(3, k, l, x, sign);
    let lhs = r(1, 2, u)?.mul(&r(1, 3, &w)?).mul(&r(2, 3, v)?);
    let rhs = r(2, 3, v)?.mul(&r(1, 3, &w)?).mul(&r(1, 2, u)?);
    Ok(lhs == rhs)
}

/// `σ12(u) σ23(u+v) σ12(v) = σ23(v) σ12(u+v) σ23(u)` on three sites.
pub fn braid_holds(u: &Scalar, v: &Scalar, sign: RSign) -> Result<bool, UnitaryError> {
    let w = u + v;
    let s = |k, x: &Scalar| sigma(3, k, x, sign);
    let lhs = s(1, u)?.mul(&s(2, &w)?).mul(&s(1, v)?);
    let rhs = s(2, v)?.mul(&s(1, &w)?).mul(&s(2, u)?);
    Ok(lhs == rhs)
}

/// Reverses the order of all `n` sites.
pub fn reversal_matrix(n: usize) -> ScalarMatrix {
    let dim = 1usize << n;
    let mut m = ScalarMatrix::zeros(dim, dim);
    for col in 0..dim {
        let mut row = 0;
        for s in 0..n {
            row |= ((col >> s) & 1) << (n - 1 - s);
        }
        m[(row, col)] = Scalar::one();
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::rank;
    use crate::exactring::scalar::{int, ratio};

    #[test]
    fn swap_on_two_sites() {
        let p = perm_matrix(2, 1, 2).unwrap();
        assert_eq!(p[(0, 0)], int(1));
        assert_eq!(p[(2, 1)], int(1));
        assert_eq!(p[(1, 2)], int(1));
        assert_eq!(p.mul(&p), ScalarMatrix::identity(4));
        assert!(perm_matrix(2, 2, 1).is_err());
    }

    #[test]
    fn sigma_chain_two_sites() {
        let r = |d: i64| rank(&sigma_chain(&[int(d), int(0)], RSign::Minus).unwrap());
        assert_eq!(r(1), 1);
        assert_eq!(r(-1), 3);
        assert_eq!(r(3), 4);
        assert!(sigma_chain(&[int(2), int(2)], RSign::Minus).is_err());
    }

    #[test]
    fn r_matrix_singular_at_one() {
        let r = r_matrix(2, 1, 2, &int(1), RSign::Minus).unwrap();
        assert_eq!(rank(&r), 1);
        assert!(ybe_holds(&int(3), &int(5), RSign::Minus).unwrap());
        assert!(braid_holds(&ratio(2, 3), &int(-4), RSign::Plus).unwrap());
    }

    #[test]
    fn reduced_words_agree() {
        let a = [ratio(1, 3), int(5), ratio(-7, 2)];
        let (x, _) = word_product(&a, &reversal_word(3), RSign::Minus, ArgOrder::LeftMinusRight).unwrap();
        let (y, _) = word_product(&a, &reversal_word_alt(3), RSign::Minus, ArgOrder::LeftMinusRight).unwrap();
        assert_eq!(x, y);
        assert_ne!(reversal_word(3), reversal_word_alt(3));
    }
}
