//! Brute-force census of M-th powers in small matrix groups.
//!
//! Enumerates GL(2, F_5) element by element, collects the set of cubes
//! `{g^3}`, classifies every element through its characteristic and minimal
//! polynomials (regular semisimple / semisimple / regular), and compares
//! the four observed proportions with the exact limit value. Nothing here
//! uses the torus-sum formula to count — the census is an independent
//! check of it.
//!
//! Run with: `cargo run --example oracle_census`

use powmap::asymptotics::limit_proportion;
use powmap::oracle::{census, CensusOptions};
use powmap::rational::decimal_string;
use powmap::tori::GroupFamily;
use powmap::ExactRational;

fn show(family: &GroupFamily, q: u64, m: u64) -> powmap::Result<()> {
    let counts = census(family, q, m, &CensusOptions::default())?;
    let limit = limit_proportion(family, m, q)?.value;

    println!("{family} over F_{q}, M = {m}: {} elements", counts.group_order);
    println!(
        "  limit value at q = {q}: {} ({})",
        limit,
        decimal_string(&limit, 6)
    );

    let rows: [(&str, u64, ExactRational); 4] = [
        ("all elements", counts.power_image, counts.proportion_image()),
        ("regular semisimple", counts.power_rs, counts.proportion_rs()),
        ("semisimple", counts.power_ss, counts.proportion_ss()),
        ("regular", counts.power_rg, counts.proportion_rg()),
    ];
    for (class, powers, proportion) in rows {
        let deviation = proportion.clone() - limit.clone();
        println!(
            "  {:<20} {:>6} M-th powers, proportion {:<8} deviation {}",
            class,
            powers,
            proportion.to_string(),
            deviation
        );
    }
    println!();
    Ok(())
}

fn main() -> powmap::Result<()> {
    show(&GroupFamily::gl(2)?, 5, 3)?;
    show(&GroupFamily::sl(2)?, 7, 2)?;
    show(&GroupFamily::u(2)?, 3, 2)?;
    Ok(())
}
