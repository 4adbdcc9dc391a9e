//! Points of the blow-up `Z` of `CP^3` at the identity class.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::exactring::scalar::{self, Scalar};

use super::BetheError;

pub type Mat2 = [[Scalar; 2]; 2];

/// A matrix class `[x11:x12:x21:x22]` together with exceptional coordinates `[y0:y1:y2]`.
///
/// Both are stored with their first nonzero coordinate scaled to 1.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BlowupPoint {
    #[serde(serialize_with = "ser_mat")]
    c: Mat2,
    #[serde(with = "scalar::serde_text_vec")]
    y: Vec<Scalar>,
    scalar: bool,
}

fn ser_mat<S: serde::Serializer>(c: &Mat2, ser: S) -> Result<S::Ok, S::Error> {
    let flat: Vec<String> = c.iter().flatten().map(scalar::format_scalar).collect();
    serde::Serialize::serialize(&flat, ser)
}

fn normalize(v: &[Scalar]) -> Option<Vec<Scalar>> {
    let lead = v.iter().find(|x| !x.is_zero())?.clone();
    Some(v.iter().map(|x| x / &lead).collect())
}

/// `[x11 − x22 : x12 : x21]`, the exceptional coordinates forced by a nonscalar class.
fn incidence_y(c: &Mat2) -> [Scalar; 3] {
    [&c[0][0] - &c[1][1], c[0][1].clone(), c[1][0].clone()]
}

/// The three incidence equations of the blow-up.
pub fn satisfies_incidence(c: &Mat2, y: &[Scalar; 3]) -> bool {
    let d = &c[0][0] - &c[1][1];
    &y[1] * &d == &y[0] * &c[0][1] && &y[2] * &c[0][1] == &y[1] * &c[1][0] && &y[2] * &d == &y[0] * &c[1][0]
}

impl BlowupPoint {
    /// Validates `C` (and `y` when given). `y` is required exactly when `C` is scalar.
    pub fn new(c: Mat2, y: Option<[Scalar; 3]>) -> Result<Self, BetheError> {
        let flat: Vec<Scalar> = c.iter().flatten().cloned().collect();
        let flat = normalize(&flat).ok_or(BetheError::ZeroMatrix)?;
        let c = [[flat[0].clone(), flat[1].clone()], [flat[2].clone(), flat[3].clone()]];
        let is_scalar = c[0][1].is_zero() && c[1][0].is_zero() && c[0][0] == c[1][1];
        let y = if is_scalar {
            let y = y.ok_or(BetheError::MissingExceptional)?;
            normalize(&y).ok_or(BetheError::Incidence("y must be nonzero".into()))?
        } else {
            if let Some(given) = &y {
                if given.iter().all(Zero::is_zero) || !satisfies_incidence(&c, given) {
                    return Err(BetheError::Incidence("y violates the incidence equations".into()));
                }
            }
            normalize(&incidence_y(&c)).expect("nonscalar class has nonzero y")
        };
        Ok(BlowupPoint { c, y, scalar: is_scalar })
    }

    /// `diag(c1, c2)`; the scalar case sits at `y = [1:0:0]`.
    pub fn diagonal(c1: Scalar, c2: Scalar) -> Result<Self, BetheError> {
        let y = [Scalar::one(), Scalar::zero(), Scalar::zero()];
        let scalar_point = c1 == c2;
        Self::new([[c1, Scalar::zero()], [Scalar::zero(), c2]], scalar_point.then_some(y))
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.c
    }

    pub fn y(&self) -> [Scalar; 3] {
        [self.y[0].clone(), self.y[1].clone(), self.y[2].clone()]
    }

    pub fn is_scalar(&self) -> bool {
        self.scalar
    }
}

pub fn mat2(x11: Scalar, x12: Scalar, x21: Scalar, x22: Scalar) -> Mat2 {
    [[x11, x12], [x21, x22]]
}
