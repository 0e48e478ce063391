//! Exact rational scalars.
//!
//! All slopes, prefix sums and pairings are [`Rational`] values backed by
//! arbitrary-precision integers and kept in lowest terms by `num-rational`.

use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// `n / d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn from_usize(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// Fractional part `x - floor(x)`, always in `[0, 1)`.
pub fn frac(x: &Rational) -> Rational {
    x - x.floor()
}

/// Denominator of the reduced fraction as a machine integer.
pub fn denom_usize(x: &Rational) -> Option<usize> {
    x.denom().to_usize()
}

/// Floor as an `i64`, for values known to be small.
pub fn floor_i64(x: &Rational) -> Option<i64> {
    x.floor().to_integer().to_i64()
}

pub fn ceil_i64(x: &Rational) -> Option<i64> {
    x.ceil().to_integer().to_i64()
}

/// Parse `[-]int[/posint]`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), Some(b.trim())),
        None => (s, None),
    };
    let digits = num.strip_prefix('-').unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = match den {
        None => BigInt::one(),
        Some(den) => {
            if den.is_empty() || !den.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            den.parse().ok()?
        }
    };
    if d.is_zero() || d.is_negative() {
        return None;
    }
    Some(Rational::new(n, d))
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}
