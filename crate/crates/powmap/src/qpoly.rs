//! Integer polynomials in the field-size variable `q`.
//!
//! The order of each cyclic factor of a maximal torus is a polynomial in
//! `q`: `q^i - 1` for `GL`, `q^i - (-1)^i` for `U`, and the divided factor
//! `1 + q + ... + q^{i-1}` for `SL`. The limit formula only ever consumes
//! these through `gcd(M, factor(q))`, which this module evaluates two ways:
//!
//! - at a concrete `q`, with exact big-integer evaluation;
//! - per residue class `q = r (mod M)`, which is what makes "the limit as
//!   `q -> infinity` along `q = r`" a total, cheap computation: for `x > 0`,
//!   `gcd(M, x)` only depends on `x mod M`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::mulmod;
use crate::error::{Error, Result};

/// Dense integer polynomial in `q`; index = power of `q`. Degrees stay tiny
/// (at most the rank of the group), so a dense list is the right shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly {
    /// Coefficients, lowest degree first; trailing coefficient nonzero
    /// unless the polynomial is identically zero (empty list).
    coeffs: Vec<BigInt>,
}

// On the wire a polynomial is a plain JSON array of integer coefficients,
// index = degree, as the custom torus file format requires.
impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<i64> = self
            .coeffs
            .iter()
            .map(|c| {
                c.to_i64().ok_or_else(|| {
                    serde::ser::Error::custom("polynomial coefficient exceeds the i64 wire format")
                })
            })
            .collect::<std::result::Result<_, S::Error>>()?;
        coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let coeffs = Vec::<i64>::deserialize(deserializer)?;
        Ok(QPoly::from_i64(&coeffs))
    }
}

impl QPoly {
    /// Builds a polynomial, trimming trailing zeros to keep the invariant.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        QPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The constant polynomial `c`.
    pub fn constant(c: i64) -> Self {
        QPoly::from_i64(&[c])
    }

    /// `q^i - 1`, the cyclic-factor order for a part of size `i` in `GL`.
    pub fn q_pow_minus_one(i: u32) -> Self {
        let mut coeffs = vec![BigInt::zero(); i as usize + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[i as usize] = BigInt::from(1);
        QPoly::new(coeffs)
    }

    /// `q^i - (-1)^i`, the cyclic-factor order for a part of size `i` in `U`.
    pub fn q_pow_minus_sign(i: u32) -> Self {
        let mut coeffs = vec![BigInt::zero(); i as usize + 1];
        coeffs[0] = if i.is_multiple_of(2) {
            BigInt::from(-1)
        } else {
            BigInt::from(1)
        };
        coeffs[i as usize] = BigInt::from(1);
        QPoly::new(coeffs)
    }

    /// `1 + q + ... + q^{i-1}`, i.e. `(q^i - 1)/(q - 1)`; the divided last
    /// factor in the `SL` torus structure. For `i = 1` this is the constant 1.
    pub fn geometric_sum(i: u32) -> Self {
        assert!(i >= 1);
        QPoly::new(vec![BigInt::from(1); i as usize])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Exact big-integer evaluation at `q >= 2` (Horner).
    pub fn eval(&self, q: u64) -> BigInt {
        assert!(q >= 2);
        let qi = BigInt::from(q);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &qi + c;
        }
        acc
    }

    /// `p(r) mod m`, reduced into `[0, m)`.
    pub fn eval_mod(&self, m: u64, r: u64) -> u64 {
        assert!(m >= 1);
        let r = r % m;
        let mut acc: u64 = 0;
        for c in self.coeffs.iter().rev() {
            let c_mod = c.mod_floor(&BigInt::from(m)).to_u64().expect("reduced");
            acc = (mulmod(acc, r, m) + c_mod) % m;
        }
        acc
    }
}

impl std::fmt::Display for QPoly {
    /// Human form used in torus tables and diagnostics: `q^2 - 1`, `q + 1`,
    /// `q^2 + q + 1`, `1`, `0`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = c.is_negative();
            if first {
                if sign {
                    f.write_str("-")?;
                }
                first = false;
            } else if sign {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let show_coeff = deg == 0 || mag != BigInt::from(1);
            if show_coeff {
                write!(f, "{mag}")?;
            }
            if deg >= 1 {
                if show_coeff {
                    f.write_str("*")?;
                }
                if deg == 1 {
                    f.write_str("q")?;
                } else {
                    write!(f, "q^{deg}")?;
                }
            }
        }
        Ok(())
    }
}

/// `gcd(M, p(q))` for a factor polynomial that must be positive at `q`.
/// A non-positive value means the polynomial cannot be the order of a
/// cyclic group at this `q` (for instance a custom factor evaluated below
/// its smallest valid field size) and is reported as an error.
pub fn gcd_with_m_at(p: &QPoly, m: u64, q: u64) -> Result<u64> {
    assert!(m >= 2);
    let value = p.eval(q);
    if !value.is_positive() {
        return Err(Error::NonPositiveFactor {
            factor: p.to_string(),
            q,
        });
    }
    let reduced = value.mod_floor(&BigInt::from(m)).to_u64().expect("reduced");
    Ok(gcd_mod(m, reduced))
}

/// `gcd(M, p(q))` as a function of the residue `r = q mod M` alone: for any
/// `q = r (mod M)` with `p(q) > 0` this equals `gcd_with_m_at(p, M, q)`.
pub fn gcd_with_m_residue(p: &QPoly, m: u64, r: u64) -> u64 {
    assert!(m >= 2);
    assert!(r < m, "residue must lie in [0, M)");
    gcd_mod(m, p.eval_mod(m, r))
}

/// `gcd(m, x)` where `x` is already reduced mod `m`; `gcd(m, 0) = m`.
fn gcd_mod(m: u64, x: u64) -> u64 {
    if x == 0 {
        m
    } else {
        num_integer::gcd(m, x)
    }
}
