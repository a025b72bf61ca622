//! Exact proportion of M-th powers in a finite abelian group.
//!
//! In `H = C_{d_1} x ... x C_{d_k}` the image of x -> x^M has index
//! `gcd(M, d_1) * ... * gcd(M, d_k)`: the factors contribute independently.
//! Maximal tori are exactly such groups, which is why the reductive-group
//! limits elsewhere in this crate are sums of reciprocals of these indices.
//! This example tabulates the ratio for a few groups, verifies each against
//! direct enumeration, and evaluates one group far too large to enumerate.
//!
//! Run with: `cargo run --example abelian_powers`

use powmap::asymptotics::abelian_power_ratio;
use powmap::oracle::{abelian_census, abelian_census_counts};
use powmap::Error;

fn main() -> powmap::Result<()> {
    let cases: [(&[u64], u64); 6] = [
        (&[6], 2),
        (&[4, 6], 2),
        (&[4, 6], 6),
        (&[12, 8, 9], 6),
        (&[7], 3),
        (&[5, 5, 5], 10),
    ];

    println!("{:<16} {:>4}  {:>9}  enumerated", "group", "M", "formula");
    for (factors, m) in cases {
        let formula = abelian_power_ratio(factors, m);
        let enumerated = abelian_census(factors, m)?;
        assert_eq!(formula, enumerated);
        let (image, order) = abelian_census_counts(factors, m)?;
        let name = factors
            .iter()
            .map(|d| format!("C_{d}"))
            .collect::<Vec<_>>()
            .join(" x ");
        println!("{name:<16} {m:>4}  {formula:>9}  {image} of {order}");
    }

    // The formula is a product of gcds, so size is irrelevant; enumeration
    // of the ~1.5 * 10^19 elements is refused by the cap instead.
    let huge: [u64; 2] = [1 << 32, 3486784401]; // C_{2^32} x C_{3^20}
    let m = 12;
    let formula = abelian_power_ratio(&huge, m);
    println!("\nC_(2^32) x C_(3^20), M = {m}: formula {formula}");
    match abelian_census_counts(&huge, m) {
        Err(err @ Error::CapExceeded { .. }) => println!("enumeration refused: {err}"),
        other => unreachable!("expected the cap to trip, got {other:?}"),
    }
    Ok(())
}
