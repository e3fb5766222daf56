//! Exact rational values (`p/q` with arbitrary precision).

use alloc::format;
use alloc::string::String;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Reduced fraction with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn from_usize(v: usize) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Canonical `p/q` rendering; integers keep the `/1` suffix so the format is
/// uniform (`0/1`, `5/2`, `-3/1`).
pub fn to_pq(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parse `p/q`, `p` or a finite decimal such as `0.15`.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidParameter(format!("not a rational: {s:?}"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole_val: BigInt = if whole.is_empty() || whole == "-" || whole == "+" {
            BigInt::zero()
        } else {
            whole.parse().map_err(|_| bad())?
        };
        let frac_val: BigInt = frac.parse().map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let mut r = Rational::from_integer(whole_val.abs()) + Rational::new(frac_val, scale);
        if negative {
            r = -r;
        }
        return Ok(r);
    }
    let p: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(p))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Decide `lhs <= coef * sqrt(beta) * scale` exactly for `coef, scale >= 0`.
///
/// Squares both sides; a negative `lhs` is always within the bound.
pub fn le_sqrt_scaled(lhs: &Rational, coef: &Rational, beta: &Rational, scale: &Rational) -> bool {
    if lhs.is_negative() || lhs.is_zero() {
        return true;
    }
    if beta.is_negative() {
        return false;
    }
    let rhs_sq = coef * coef * beta * scale * scale;
    lhs * lhs <= rhs_sq
}

/// Decide `lhs < coef * sqrt(beta) * scale` exactly for `coef, scale >= 0`.
pub fn lt_sqrt_scaled(lhs: &Rational, coef: &Rational, beta: &Rational, scale: &Rational) -> bool {
    if lhs.is_negative() {
        return true;
    }
    if beta.is_negative() {
        return false;
    }
    lhs * lhs < coef * coef * beta * scale * scale
}

/// `|value - center| <= coef * sqrt(beta) * scale`, exactly.
pub fn within_sqrt_band(
    value: &Rational,
    center: &Rational,
    coef: &Rational,
    beta: &Rational,
    scale: &Rational,
) -> bool {
    let dev = (value - center).abs();
    le_sqrt_scaled(&dev, coef, beta, scale)
}

/// Floor of a rational as `i64` (saturating on overflow).
pub fn floor_i64(r: &Rational) -> i64 {
    r.floor().to_integer().to_i64().unwrap_or(if r.is_negative() { i64::MIN } else { i64::MAX })
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a, I: IntoIterator<Item = &'a Rational>>(values: I) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// `sqrt(r)` as f64, for human-readable reports.
pub fn sqrt_f64(r: &Rational) -> f64 {
    libm::sqrt(to_f64(r))
}
