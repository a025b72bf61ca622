//! Exact rational arithmetic for every proportion and limit in the crate.
//!
//! `ExactRational` is `num_rational::BigRational`: arbitrary-precision,
//! always reduced, denominator positive. This module adds the small pieces
//! the tool needs on top: convenient constructors, decimal rendering with an
//! explicit precision (display-layer only, clearly rounded), and the
//! numerator/denominator string form used by the JSON and CSV schemas.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision reduced fraction.
pub type ExactRational = BigRational;

/// `num / den` as an exact rational.
pub fn ratio(num: u64, den: u64) -> ExactRational {
    assert!(den != 0);
    ExactRational::new(BigInt::from(num), BigInt::from(den))
}

/// `1 / d` for a positive big integer `d`.
pub fn recip(d: &BigUint) -> ExactRational {
    assert!(!d.is_zero());
    ExactRational::new(BigInt::one(), BigInt::from(d.clone()))
}

/// Renders `x` rounded to `decimals` fractional digits (half away from
/// zero). Display-only; never feeds back into any computation.
pub fn decimal_string(x: &ExactRational, decimals: u32) -> String {
    let sign = if x.is_negative() { "-" } else { "" };
    let num = x.numer().abs();
    let den = x.denom().clone();
    let scale = BigInt::from(10u32).pow(decimals);
    let scaled = num * &scale;
    let (mut quot, rem) = scaled.div_rem(&den);
    if &rem * 2 >= den {
        quot += 1;
    }
    let (int_part, frac_part) = quot.div_rem(&scale);
    if decimals == 0 {
        format!("{sign}{int_part}")
    } else {
        format!(
            "{sign}{int_part}.{frac:0>width$}",
            frac = frac_part.to_string(),
            width = decimals as usize
        )
    }
}

/// Parses a non-negative decimal literal such as `2`, `0.5` or `1.25` into
/// an exact rational. Used for user-supplied bounds on the command line.
pub fn parse_decimal(s: &str) -> Option<ExactRational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    let (int_part, frac_part) = match s.split_once('.') {
        Some((i, f)) => (i, f),
        None => (s, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let digits_ok = |t: &str| t.chars().all(|c| c.is_ascii_digit());
    if !digits_ok(int_part) || !digits_ok(frac_part) {
        return None;
    }
    let joined = format!("{int_part}{frac_part}");
    let num: BigInt = joined.parse().ok()?;
    let den = BigInt::from(10u32).pow(frac_part.len() as u32);
    Some(ExactRational::new(num, den))
}
