//! Rate of convergence of the finite-q proportion to its limit.
//!
//! The proportion of squares in GL(2, F_q) differs from the limiting value
//! 3/8 by O(1/q) for odd q. This example runs the brute-force census at
//! every odd prime power q <= 13 and prints q * |deviation| for the image
//! and for the three regularity classes: the products stay bounded (they
//! approach constants) while the deviations themselves shrink.
//!
//! Run with: `cargo run --example convergence`

use num_traits::Signed;
use powmap::asymptotics::limit_proportion_residue;
use powmap::oracle::{census, CensusOptions};
use powmap::rational::{decimal_string, ratio};
use powmap::tori::GroupFamily;

fn main() -> powmap::Result<()> {
    let family = GroupFamily::gl(2)?;
    let m = 2;
    let limit = limit_proportion_residue(&family, m, 1)?.value;
    println!("GL(2), M = {m}, limit along odd q: {limit}\n");
    println!(
        "{:>3}  {:>10}  {:>12}  {:>8}  {:>8}  {:>8}  {:>8}",
        "q", "proportion", "deviation", "q*|dev|", "rs", "ss", "rg"
    );

    for q in [3, 5, 7, 9, 11, 13] {
        let counts = census(&family, q, m, &CensusOptions::default())?;
        let scale = |p: powmap::ExactRational| {
            let scaled = (p - limit.clone()).abs() * ratio(q, 1);
            decimal_string(&scaled, 4)
        };
        let proportion = counts.proportion_image();
        let deviation = proportion.clone() - limit.clone();
        println!(
            "{:>3}  {:>10}  {:>12}  {:>8}  {:>8}  {:>8}  {:>8}",
            q,
            decimal_string(&proportion, 6),
            deviation.to_string(),
            scale(proportion),
            scale(counts.proportion_rs()),
            scale(counts.proportion_ss()),
            scale(counts.proportion_rg())
        );
    }

    println!("\nall four classes share the same limit; the scaled deviations");
    println!("settle toward constants, the signature of a c/q error term");
    Ok(())
}
