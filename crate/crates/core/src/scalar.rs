//! The coefficient field: arbitrary-precision rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// `base^exp` for a nonnegative integer exponent.
pub fn pow(base: &Rational, exp: u32) -> Rational {
    num_traits::pow(base.clone(), exp as usize)
}

/// Numerator and denominator as decimal strings (denominator positive).
pub fn to_parts(q: &Rational) -> (String, String) {
    (q.numer().to_string(), q.denom().to_string())
}

pub fn from_parts(num: &str, den: &str) -> Result<Rational> {
    let n: BigInt = num
        .trim()
        .parse()
        .map_err(|_| Error::Input(format!("bad numerator {num:?}")))?;
    let d: BigInt = den
        .trim()
        .parse()
        .map_err(|_| Error::Input(format!("bad denominator {den:?}")))?;
    if d.is_zero() {
        return Err(Error::Input("zero denominator".into()));
    }
    Ok(Rational::new(n, d))
}

/// Parses `"p"` or `"p/q"`.
pub fn parse(s: &str) -> Result<Rational> {
    match s.split_once('/') {
        Some((n, d)) => from_parts(n, d),
        None => from_parts(s, "1"),
    }
}

/// `p/q` form used by the CSV and triplet exports.
pub fn to_slash(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}
