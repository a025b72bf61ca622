//! Classify every subsequential limit of the power proportion for prime M.
//!
//! As q grows, the proportion `|GL(n,q)^M| / |GL(n,q)|` does not converge:
//! its limit points are indexed by the arithmetic of q mod M. For prime M
//! the conditions are `M | q` (limit 1) and one condition per divisor `a`
//! of M - 1 — the possible multiplicative orders of q mod M. This example
//! prints the full classification for GL(4) and U(4) with M = 5 and checks
//! the number of distinct values against `1 + nu(M - 1, n)`, where `nu`
//! counts the divisors of M - 1 that are at most n (larger orders leave
//! every torus factor coprime to M, so they merge into the value 1).
//!
//! Run with: `cargo run --example subsequential_limits`

use powmap::asymptotics::{nu, subsequential_limits};
use powmap::rational::decimal_string;
use powmap::tori::GroupFamily;

fn main() -> powmap::Result<()> {
    let m = 5;
    for family in [GroupFamily::gl(4)?, GroupFamily::u(4)?] {
        let limits = subsequential_limits(&family, m)?;
        println!("{family}, M = {m}:");
        for entry in &limits.entries {
            println!(
                "  {:<18} ->  {:<12} ({})",
                entry.condition,
                entry.value.to_string(),
                decimal_string(&entry.value, 6)
            );
        }
        let n = family.n().expect("built-in family");
        let expected = 1 + nu(m - 1, n);
        println!(
            "  {} distinct values; 1 + nu({}, {}) = {}",
            limits.distinct_count(),
            m - 1,
            n,
            expected
        );
        assert_eq!(limits.distinct_count(), expected);
        assert!(
            limits.collisions.is_empty(),
            "two conditions below 1 share a value: {:?}",
            limits.collisions
        );
        println!();
    }

    // Once n is smaller than some divisor of M - 1, conditions start to
    // collapse into the value 1: for GL(2) and M = 5, the order-4 class
    // already behaves like the generic one.
    let small = subsequential_limits(&GroupFamily::gl(2)?, m)?;
    println!("GL(2), M = {m}:");
    for entry in &small.entries {
        println!("  {:<18} ->  {}", entry.condition, entry.value);
    }
    assert_eq!(small.distinct_count(), 1 + nu(m - 1, 2));
    Ok(())
}
