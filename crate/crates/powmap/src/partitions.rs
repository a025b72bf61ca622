//! Integer partitions and the symmetric-group statistics attached to them.
//!
//! Partitions of `n` index the conjugacy classes of maximal tori in
//! `GL(n,q)`, `SL(n,q)` and `U(n,q)`, so everything downstream is driven by
//! three quantities computed here:
//!
//! - the centralizer order `prod_i m_i! * i^{m_i}` of a permutation with
//!   cycle type `lambda = 1^{m_1} 2^{m_2} ...`, which is the Weyl-group
//!   weight `|W_T|` of the corresponding torus;
//! - `pi_a(lambda)`: the number of parts divisible by `a`;
//! - `pi_prime_a(lambda)`: the unitary-twisted variant that distinguishes
//!   even and odd parts.
//!
//! All functions are pure and exact.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Default bound on `n` for partition enumeration. Centralizer orders grow
/// factorially, so the CLI refuses larger `n` unless the cap is raised.
pub const DEFAULT_PARTITION_CAP: u32 = 60;

/// A partition of a non-negative integer, stored with parts in
/// non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts that must already be non-increasing and
    /// positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Invalid("partition parts must be positive".into()));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Invalid(
                "partition parts must be non-increasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts, counted with multiplicity.
    pub fn part_count(&self) -> u32 {
        self.parts.len() as u32
    }

    /// Power notation: `(part, multiplicity)` pairs with parts descending.
    /// Computed on demand from the sorted parts.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((part, m)) if *part == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Canonical text label, e.g. `(2,1,1)`; the empty partition is `()`.
    pub fn label(&self) -> String {
        let inner: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        format!("({})", inner.join(","))
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.label())
    }
}

/// Enumerates every partition of `n` exactly once, in reverse-lexicographic
/// order on the part vectors: `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
/// For `n = 0` the single empty partition is returned. The order is fixed so
/// reports and serialized output are byte-stable across runs.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    descend(n, n, &mut current, &mut out);
    out
}

fn descend(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    let top = remaining.min(max_part);
    for part in (1..=top).rev() {
        current.push(part);
        descend(remaining - part, part, current, out);
        current.pop();
    }
}

/// The order of the centralizer in `S_n` of a permutation with cycle type
/// `p`: `prod_i m_i! * i^{m_i}` over the multiplicities `m_i` of part `i`.
/// This is `|W_T|` for the maximal torus labelled by `p`.
pub fn centralizer_order(p: &Partition) -> BigUint {
    let mut order = BigUint::one();
    for (part, mult) in p.multiplicities() {
        for j in 1..=mult {
            order *= BigUint::from(j);
        }
        order *= BigUint::from(part).pow(mult);
    }
    order
}

/// Number of parts of `p` divisible by `a`, counted with multiplicity.
pub fn pi_a(p: &Partition, a: u32) -> u32 {
    assert!(a >= 1);
    p.parts.iter().filter(|&&part| part % a == 0).count() as u32
}

/// The unitary-twisted part count: parts `n_i` such that either `n_i` is
/// even and `a | n_i`, or `n_i` is odd, `a` is even and `a | 2 n_i`.
pub fn pi_prime_a(p: &Partition, a: u32) -> u32 {
    assert!(a >= 1);
    p.parts
        .iter()
        .filter(|&&part| {
            if part % 2 == 0 {
                part % a == 0
            } else {
                a.is_multiple_of(2) && (2 * part) % a == 0
            }
        })
        .count() as u32
}
