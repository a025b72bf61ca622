//! Explicit finite fields `F_{p^k}` with table-driven arithmetic.
//!
//! Elements are `u32` indices: the element `sum a_i x^i` (with `0 <= a_i < p`)
//! is the integer `sum a_i p^i`, so `0` and `1` are the field's zero and one
//! for every `p` and `k`. Extension fields are quotients by the
//! lexicographically smallest monic irreducible of the requested degree,
//! where "smallest" reads the coefficient vector low-to-high as a base-`p`
//! integer; this makes the representation canonical, so equal parameters
//! always produce the identical element encoding.
//!
//! Multiplication and inversion go through discrete-log tables built from a
//! fixed primitive element, which keeps the hot census loops to two array
//! reads. Field sizes are capped (default `2^16`) because tables and brute
//! enumeration stop being sensible beyond that.

use crate::arith::{is_prime, prime_power};
use crate::error::{Error, Result};
use num_bigint::BigUint;

/// Largest allowed field order.
pub const DEFAULT_FIELD_CAP: u64 = 1 << 16;

#[derive(Debug, Clone)]
pub struct FiniteField {
    p: u64,
    k: u32,
    q: u64,
    /// Monic irreducible modulus, coefficients low-to-high, length `k + 1`.
    modulus: Vec<u64>,
    /// `exp[i] = g^i` for a primitive element `g`, doubled so that
    /// `exp[log a + log b]` never needs a reduction.
    exp: Vec<u32>,
    /// `log[e]` for nonzero `e`; `log[0]` is a sentinel and never read.
    log: Vec<u32>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        // canonical modulus choice makes (p, k) a complete identity
        self.p == other.p && self.k == other.k
    }
}
impl Eq for FiniteField {}

impl FiniteField {
    /// The field with `p^k` elements (default size cap).
    pub fn new(p: u64, k: u32) -> Result<FiniteField> {
        FiniteField::with_cap(p, k, DEFAULT_FIELD_CAP)
    }

    /// The field of order `q`, factoring `q` into a prime power first.
    pub fn for_order(q: u64) -> Result<FiniteField> {
        let (p, k) = prime_power(q)?;
        FiniteField::new(p, k)
    }

    pub fn with_cap(p: u64, k: u32, cap: u64) -> Result<FiniteField> {
        if !is_prime(p) {
            return Err(Error::Invalid(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(Error::Invalid("extension degree must be positive".into()));
        }
        let q = (p as u128).checked_pow(k).filter(|&q| q <= u128::from(cap));
        let Some(q) = q else {
            let predicted = BigUint::from(p).pow(k);
            return Err(Error::CapExceeded {
                what: "field order",
                predicted,
                cap,
            });
        };
        let q = q as u64;
        let modulus = smallest_irreducible(p, k);
        let mut field = FiniteField {
            p,
            k,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
        };
        field.build_tables();
        Ok(field)
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// Modulus coefficients, low-to-high (length `degree + 1`).
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// All elements, `0..order`, in canonical encoding order.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return ((u64::from(a) + u64::from(b)) % self.p) as u32;
        }
        let (mut a, mut b) = (u64::from(a), u64::from(b));
        let (mut out, mut place) = (0u64, 1u64);
        for _ in 0..self.k {
            out += ((a + b) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out as u32
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.k == 1 {
            return ((self.p - u64::from(a)) % self.p) as u32;
        }
        let mut a = u64::from(a);
        let (mut out, mut place) = (0u64, 1u64);
        for _ in 0..self.k {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out as u32
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "zero has no inverse");
        let qm1 = (self.q - 1) as u32;
        self.exp[(qm1 - self.log[a as usize]) as usize]
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let qm1 = self.q - 1;
        let idx = (u64::from(self.log[a as usize]) * (e % qm1)) % qm1;
        self.exp[idx as usize]
    }

    fn build_tables(&mut self) {
        let q = self.q as usize;
        let qm1 = q - 1;
        let g = self.find_primitive();
        self.exp = vec![0; 2 * qm1];
        self.log = vec![0; q];
        let mut x = vec![0u64; self.k as usize];
        x[0] = 1;
        for i in 0..qm1 {
            let e = self.encode(&x);
            self.exp[i] = e;
            self.log[e as usize] = i as u32;
            x = self.poly_mul(&x, &g);
        }
        debug_assert_eq!(self.encode(&x), 1, "primitive element order is wrong");
        for i in qm1..2 * qm1 {
            self.exp[i] = self.exp[i - qm1];
        }
    }

    /// Smallest-index primitive element, as a coefficient vector.
    fn find_primitive(&self) -> Vec<u64> {
        let qm1 = self.q - 1;
        if qm1 == 1 {
            return self.decode(1);
        }
        let prime_factors = distinct_prime_factors(qm1);
        'candidates: for idx in 2..self.q as u32 {
            let cand = self.decode(idx);
            for &f in &prime_factors {
                if self.encode(&self.poly_pow(&cand, qm1 / f)) == 1 {
                    continue 'candidates;
                }
            }
            return cand;
        }
        unreachable!("every finite field has a primitive element")
    }

    fn encode(&self, coeffs: &[u64]) -> u32 {
        let mut out = 0u64;
        for &c in coeffs.iter().rev() {
            out = out * self.p + c;
        }
        out as u32
    }

    fn decode(&self, idx: u32) -> Vec<u64> {
        let mut idx = u64::from(idx);
        let mut out = vec![0u64; self.k as usize];
        for digit in out.iter_mut() {
            *digit = idx % self.p;
            idx /= self.p;
        }
        out
    }

    /// Coefficient-vector product reduced by the modulus; used only while
    /// building tables.
    fn poly_mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let k = self.k as usize;
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai * bj) % self.p;
            }
        }
        // reduce x^d = -(modulus - x^k) shifted, from the top down
        for d in (k..prod.len()).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for (j, &mj) in self.modulus.iter().enumerate().take(k) {
                let t = (c * mj) % self.p;
                prod[d - k + j] = (prod[d - k + j] + self.p - t) % self.p;
            }
        }
        prod.truncate(k);
        prod
    }

    fn poly_pow(&self, a: &[u64], mut e: u64) -> Vec<u64> {
        let mut base = a.to_vec();
        let mut acc = vec![0u64; self.k as usize];
        acc[0] = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.poly_mul(&acc, &base);
            }
            base = self.poly_mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// The lexicographically smallest monic irreducible of degree `k` over
/// `F_p`, scanning the non-leading coefficients low-to-high as a base-`p`
/// counter. Irreducibility by exhaustive trial division: a reducible monic
/// polynomial of degree `k` has a monic factor of degree at most `k / 2`.
fn smallest_irreducible(p: u64, k: u32) -> Vec<u64> {
    let k = k as usize;
    if k == 1 {
        // degree one is always irreducible; the smallest is x itself
        return vec![0, 1];
    }
    let mut tail = vec![0u64; k];
    loop {
        let mut cand = tail.clone();
        cand.push(1);
        if is_irreducible(&cand, p) {
            return cand;
        }
        // base-p increment; k >= 2 guarantees an irreducible exists before
        // the counter would wrap
        for digit in tail.iter_mut() {
            *digit += 1;
            if *digit < p {
                break;
            }
            *digit = 0;
        }
    }
}

fn is_irreducible(cand: &[u64], p: u64) -> bool {
    let k = cand.len() - 1;
    let mut tail = Vec::new();
    for d in 1..=k / 2 {
        tail.clear();
        tail.resize(d, 0u64);
        loop {
            let mut div = tail.clone();
            div.push(1);
            if poly_rem_is_zero(cand, &div, p) {
                return false;
            }
            let mut carried = true;
            for digit in tail.iter_mut() {
                *digit += 1;
                if *digit < p {
                    carried = false;
                    break;
                }
                *digit = 0;
            }
            if carried {
                break;
            }
        }
    }
    true
}

/// Does the monic `div` divide `a` over `F_p`?
fn poly_rem_is_zero(a: &[u64], div: &[u64], p: u64) -> bool {
    let mut rem = a.to_vec();
    let d = div.len() - 1;
    while rem.len() > d {
        let lead = rem[rem.len() - 1];
        if lead != 0 {
            let shift = rem.len() - 1 - d;
            for (j, &mj) in div.iter().enumerate().take(d) {
                let t = (lead * mj) % p;
                rem[shift + j] = (rem[shift + j] + p - t) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_fields() {
        let f2 = FiniteField::new(2, 1).unwrap();
        assert_eq!(f2.order(), 2);
        assert_eq!(f2.add(1, 1), 0);
        assert_eq!(f2.mul(1, 1), 1);

        let f7 = FiniteField::new(7, 1).unwrap();
        assert_eq!(f7.add(5, 4), 2);
        assert_eq!(f7.mul(3, 5), 1);
        assert_eq!(f7.inv(3), 5);
        assert_eq!(f7.neg(2), 5);
        assert_eq!(f7.pow(3, 6), 1);
    }

    #[test]
    fn f4_modulus_is_the_unique_irreducible_quadratic() {
        let f4 = FiniteField::new(2, 2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]); // x^2 + x + 1
        assert_eq!(f4.order(), 4);
    }

    #[test]
    fn f9_modulus_is_lexicographically_smallest() {
        let f9 = FiniteField::new(3, 2).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]); // x^2 + 1; x^2 is reducible
    }

    #[test]
    fn multiplicative_group_order() {
        for (p, k) in [(2u64, 1u32), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1), (2, 4)] {
            let f = FiniteField::new(p, k).unwrap();
            let qm1 = f.order() - 1;
            for a in 1..f.order() as u32 {
                assert_eq!(f.pow(a, qm1), 1, "x^(q-1) != 1 in F_{}", f.order());
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_on_f8_and_f9() {
        for q in [8u64, 9] {
            let f = FiniteField::for_order(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c)),
                            "distributivity fails in F_{q}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_additive() {
        for q in [8u64, 9, 25] {
            let f = FiniteField::for_order(q).unwrap();
            let p = f.characteristic();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(
                        f.pow(f.add(a, b), p),
                        f.add(f.pow(a, p), f.pow(b, p))
                    );
                }
            }
        }
    }

    #[test]
    fn conjugation_fixes_the_base_field() {
        // sigma = x^q on F_{q^2} fixes exactly the q base-field elements
        let f = FiniteField::for_order(49).unwrap();
        let fixed = f.elements().filter(|&a| f.pow(a, 7) == a).count();
        assert_eq!(fixed, 7);
    }

    #[test]
    fn caps_and_validation() {
        assert!(matches!(
            FiniteField::new(2, 17),
            Err(Error::CapExceeded { .. })
        ));
        assert!(FiniteField::new(2, 16).is_ok());
        assert!(FiniteField::new(4, 1).is_err());
        assert!(FiniteField::new(2, 0).is_err());
        assert!(matches!(
            FiniteField::for_order(6),
            Err(Error::NotPrimePower(6))
        ));
        assert!(matches!(
            FiniteField::with_cap(2, 5, 16),
            Err(Error::CapExceeded { .. })
        ));
    }
}
