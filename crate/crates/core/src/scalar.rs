//! Exact rational scalars.
//!
//! Every quantity in the crate is a [`Scalar`], an arbitrary-precision
//! rational kept in lowest terms with a positive denominator. Equality is
//! literal equality, so identity checks never need a tolerance.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::ScalarParseError;

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// `num / den`, normalized. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_scalar(s: &Scalar) -> String {
    s.to_string()
}

/// Parses the canonical `p` / `p/q` encoding.
///
/// Rejects anything that is not already in lowest terms with `q > 0`,
/// as well as leading `+`, whitespace, and leading zeros.
pub fn parse_scalar(text: &str) -> Result<Scalar, ScalarParseError> {
    let bad = |reason: &str| ScalarParseError {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let (num_text, den_text) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let num = parse_integer(num_text, true).map_err(&bad)?;
    let den = match den_text {
        None => BigInt::one(),
        Some(d) => {
            let d = parse_integer(d, false).map_err(&bad)?;
            if d.is_zero() {
                return Err(bad("zero denominator"));
            }
            d
        }
    };
    if !num.gcd(&den).is_one() {
        return Err(bad("not in lowest terms"));
    }
    Ok(BigRational::new_raw(num, den))
}

fn parse_integer(text: &str, allow_sign: bool) -> Result<BigInt, &'static str> {
    let digits = match text.strip_prefix('-') {
        Some(rest) if allow_sign => rest,
        Some(_) => return Err("denominator must be positive"),
        None => text,
    };
    if digits.is_empty() {
        return Err("missing digits");
    }
    if !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err("expected decimal digits");
    }
    if digits.len() > 1 && digits.starts_with('0') {
        return Err("leading zero");
    }
    if digits == "0" && text.starts_with('-') {
        return Err("negative zero");
    }
    Ok(text.parse::<BigInt>().expect("validated decimal"))
}
