//! Per-torus breakdown of the limiting proportion of M-th powers.
//!
//! Computes `lim |G^M| / |G|` as q grows for G = GL(3, F_q) with M = 2,
//! first at the concrete field size q = 5 and then along both residue
//! classes of q mod 2. Each conjugacy class of maximal tori T contributes
//! `1 / (|W_T| * gcd(M, d_1) * ... * gcd(M, d_s))`, where
//! `C_{d_1} x ... x C_{d_s}` is the cyclic structure of the torus and
//! `|W_T|` the order of its Weyl-group centralizer. The gcds depend on q
//! only through `q mod M`, which is why residue classes have a single value.
//!
//! Run with: `cargo run --example limit_report`

use powmap::asymptotics::{limit_proportion, limit_proportion_residue, LimitReport};
use powmap::rational::decimal_string;
use powmap::tori::GroupFamily;

fn print_report(report: &LimitReport) {
    println!(
        "{}, M = {}, {}",
        report.family,
        report.m,
        report.point.describe(report.m)
    );
    for term in &report.terms {
        let gcds: Vec<String> = term.gcds.iter().map(u64::to_string).collect();
        println!(
            "  torus {:<8} {:<32} |W_T| = {:<3} gcds = {:<8} term = {}",
            term.label,
            term.structure,
            term.weyl_order,
            gcds.join(","),
            term.term
        );
    }
    println!(
        "  limit = {}  ({})\n",
        report.value,
        decimal_string(&report.value, 6)
    );
}

fn main() -> powmap::Result<()> {
    let gl3 = GroupFamily::gl(3)?;

    // At a concrete prime power the gcds are evaluated at q itself.
    print_report(&limit_proportion(&gl3, 2, 5)?);

    // Along a residue class the same value is shared by every sufficiently
    // large prime power in the class. For M = 2 the classes are odd and
    // even q; squaring is far from onto in odd characteristic but onto in
    // the limit for even characteristic.
    print_report(&limit_proportion_residue(&gl3, 2, 1)?);
    print_report(&limit_proportion_residue(&gl3, 2, 0)?);

    // The value at any concrete q is exactly the value of its residue class.
    let at_q = limit_proportion(&gl3, 2, 7)?.value;
    let at_class = limit_proportion_residue(&gl3, 2, 1)?.value;
    assert_eq!(at_q, at_class);
    println!("q = 7 evaluates on the odd-q class value {at_q}, as expected");
    Ok(())
}
