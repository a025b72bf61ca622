//! Small number-theoretic helpers on machine integers: primality by trial
//! division, prime-power decomposition, divisors, and multiplicative order.
//! Everything here works on the modest ranges the tool accepts (fields up to
//! the configured cap, exponents up to a few thousand), so the simple exact
//! algorithms are the right ones.

use crate::error::{Error, Result};

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).is_some_and(|dd| dd <= n) {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Decompose `q` as `p^k` with `p` prime, or fail.
///
/// The base is found by factoring `q` over primes up to `sqrt(q)`; whatever
/// prime divides `q` must be the base of the power.
pub fn prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let mut p = q;
    let mut d = 2u64;
    while d.checked_mul(d).is_some_and(|dd| dd <= q) {
        if q.is_multiple_of(d) {
            p = d;
            break;
        }
        d += 1;
    }
    // p is the smallest prime factor of q (or q itself, then q is prime).
    let mut rest = q;
    let mut k = 0u32;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    if rest == 1 {
        Ok((p, k))
    } else {
        Err(Error::NotPrimePower(q))
    }
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d.checked_mul(d).is_some_and(|dd| dd <= n) {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Multiplicative order of `x` modulo `m`, for `gcd(x, m) = 1` and `m >= 2`.
pub fn multiplicative_order(x: u64, m: u64) -> u64 {
    assert!(m >= 2);
    assert_eq!(num_integer::gcd(x, m), 1, "order requires gcd(x, m) = 1");
    let x = x % m;
    let mut acc = x;
    let mut ord = 1u64;
    while acc != 1 {
        acc = mulmod(acc, x, m);
        ord += 1;
    }
    ord
}

/// `(a * b) mod m` without overflow.
pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}
