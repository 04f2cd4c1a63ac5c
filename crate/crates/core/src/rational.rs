//! Exact rational helpers.
//!
//! All fractional quantities in this crate are [`BigRational`] values, which
//! are kept in lowest terms with a positive denominator by `num-rational`.
//! Bounds involving a square root are compared by squaring, so no floating
//! point ever enters a certificate check.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_u64(v: u64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Serializes as `p/q`, always with an explicit denominator.
pub fn to_pq(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_pq(s: &str) -> Option<Rational> {
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p: BigInt = p.parse().ok()?;
    let q: BigInt = q.parse().ok()?;
    if q.is_zero() {
        return None;
    }
    Some(Rational::new(p, q))
}

/// `value <= 2x - sqrt(x)/4`, decided exactly.
pub fn le_two_x_minus_quarter_sqrt(value: &Rational, x: &Rational) -> bool {
    assert!(!x.is_negative(), "square root of a negative rational");
    let slack = x * int(2) - value;
    if slack.is_negative() {
        return false;
    }
    &slack * &slack * int(16) >= *x
}

/// `value >= e/2 + sqrt(e)/4`, decided exactly.
pub fn ge_half_plus_quarter_sqrt(value: &Rational, e: &Rational) -> bool {
    assert!(!e.is_negative(), "square root of a negative rational");
    let slack = value - e / int(2);
    if slack.is_negative() {
        return false;
    }
    &slack * &slack * int(16) >= *e
}

/// `value >= sqrt(x)/2`, decided exactly.
pub fn ge_half_sqrt(value: &Rational, x: &Rational) -> bool {
    if value.is_negative() {
        return x.is_zero() && value.is_zero();
    }
    value * value * int(4) >= *x
}

/// True when `r` is an integer.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Best-effort float view, for display only.
pub fn approx(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}
