//! Arbitrary-precision rationals.
//!
//! `Scalar` is `num_rational::BigRational`, which is always stored reduced with a
//! positive denominator. The helpers here cover construction, the `"p/q"` text
//! form used in every report, and conversion to `f64` for the numeric side.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serializer};

use super::AlgebraError;

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `num / den` in lowest terms. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Scalar {
    assert!(den != 0, "zero denominator");
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p"`, `"p/q"` or a plain decimal such as `"-0.25"`.
pub fn parse_scalar(text: &str) -> Result<Scalar, AlgebraError> {
    let bad = || AlgebraError::ParseScalar(text.to_string());
    let t = text.trim();
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Scalar::new(n, d));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        if !whole_digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = format!("{whole_digits}{frac}");
        let n: BigInt = if digits.is_empty() {
            BigInt::zero()
        } else {
            digits.parse().map_err(|_| bad())?
        };
        let d = num_traits::pow(BigInt::from(10), frac.len());
        let v = Scalar::new(n, d);
        return Ok(if negative { -v } else { v });
    }
    let n: BigInt = t.parse().map_err(|_| bad())?;
    Ok(Scalar::from_integer(n))
}

/// `"p/q"` for non-integers, `"p"` for integers.
pub fn format_scalar(s: &Scalar) -> String {
    s.to_string()
}

pub fn to_f64(s: &Scalar) -> f64 {
    s.to_f64().unwrap_or_else(|| {
        // numerator and denominator both overflow f64; fall back to a scaled quotient
        let n = s.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = s.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

/// Best rational with denominator at most `max_den` (continued fractions).
pub fn from_f64_approx(x: f64, max_den: i64) -> Scalar {
    if !x.is_finite() {
        return Scalar::zero();
    }
    let sign = if x < 0.0 { -1 } else { 1 };
    let mut v = x.abs();
    let (mut p0, mut q0, mut p1, mut q1) = (0i64, 1i64, 1i64, 0i64);
    for _ in 0..64 {
        let a = v.floor();
        if a > 1e15 {
            break;
        }
        let a = a as i64;
        let (p2, q2) = (a * p1 + p0, a * q1 + q0);
        if q2 > max_den {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        let frac = v - a as f64;
        if frac < 1e-15 {
            break;
        }
        v = 1.0 / frac;
    }
    if q1 == 0 {
        return Scalar::zero();
    }
    ratio(sign * p1, q1)
}

pub fn is_integer(s: &Scalar) -> bool {
    s.denom().is_one()
}

/// `Some(n)` when `s` is a non-negative integer that fits in `usize`.
pub fn as_nonnegative_integer(s: &Scalar) -> Option<usize> {
    if is_integer(s) && !s.is_negative() {
        s.numer().to_usize()
    } else {
        None
    }
}

/// Serde adapter: scalars travel as `"p/q"` strings.
pub mod serde_text {
    use super::*;

    pub fn serialize<S: Serializer>(s: &Scalar, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&format_scalar(s))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Scalar, D::Error> {
        let text = String::deserialize(de)?;
        parse_scalar(&text).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for `Vec<Scalar>`.
pub mod serde_text_vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(v: &[Scalar], ser: S) -> Result<S::Ok, S::Error> {
        let mut seq = ser.serialize_seq(Some(v.len()))?;
        for s in v {
            seq.serialize_element(&format_scalar(s))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Scalar>, D::Error> {
        let texts = Vec::<String>::deserialize(de)?;
        texts
            .iter()
            .map(|t| parse_scalar(t).map_err(serde::de::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_scalar("3").unwrap(), int(3));
        assert_eq!(parse_scalar("-6/4").unwrap(), ratio(-3, 2));
        assert_eq!(parse_scalar(" 0.25 ").unwrap(), ratio(1, 4));
        assert_eq!(parse_scalar("-1.5").unwrap(), ratio(-3, 2));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("(1,0").is_err());
        assert!(parse_scalar("").is_err());
    }

    #[test]
    fn canonical_form() {
        let s = ratio(4, -6);
        assert_eq!(s.numer(), &BigInt::from(-2));
        assert_eq!(s.denom(), &BigInt::from(3));
        assert_eq!(format_scalar(&s), "-2/3");
        assert_eq!(format_scalar(&int(5)), "5");
    }

    #[test]
    fn approx_from_float() {
        assert_eq!(from_f64_approx(0.5, 1000), ratio(1, 2));
        assert_eq!(from_f64_approx(-0.333333333, 1000), ratio(-1, 3));
    }
}
