//! Exact rational scalars.
//!
//! All coefficients in this crate are arbitrary-precision rationals kept in
//! lowest terms with a positive denominator. `Rational` is
//! [`num_rational::BigRational`], which maintains exactly those invariants;
//! this module adds the strict textual grammar used by the space file format
//! and the number renderer: `int` or `int "/" positive-int`.

use num_bigint::BigInt;
use num_traits::Zero;
use std::str::FromStr;

pub type Rational = num_rational::BigRational;

/// Error produced when a string does not match the rational grammar.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational {input:?}: {reason}")]
pub struct ParseRationalError {
    pub input: String,
    pub reason: String,
}

impl ParseRationalError {
    fn new(input: &str, reason: impl Into<String>) -> Self {
        ParseRationalError {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}

/// Shorthand constructor used pervasively in tests and examples.
///
/// Panics if `denom` is zero; use [`parse_rational`] for untrusted input.
pub fn rat(numer: i64, denom: i64) -> Rational {
    assert!(denom != 0, "rational denominator must be nonzero");
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p` or `p/q` with `p` a signed integer and `q` a positive integer.
///
/// The value is reduced to lowest terms, so `"2/4"` parses to `1/2`. A zero,
/// negative, or signed denominator is rejected.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let (numer_str, denom_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer = parse_int(numer_str, true)
        .ok_or_else(|| ParseRationalError::new(s, "numerator must be an integer"))?;
    let denom = match denom_str {
        None => BigInt::from(1),
        Some(d) => {
            let d = parse_int(d, false)
                .ok_or_else(|| ParseRationalError::new(s, "denominator must be an unsigned integer"))?;
            if d.is_zero() {
                return Err(ParseRationalError::new(s, "denominator is zero"));
            }
            d
        }
    };
    Ok(Rational::new(numer, denom))
}

fn parse_int(s: &str, allow_sign: bool) -> Option<BigInt> {
    let digits = match s.strip_prefix('-') {
        Some(rest) if allow_sign => rest,
        Some(_) => return None,
        None => s,
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(s).ok()
}

/// Renders in lowest terms: `p/q`, or just `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}
