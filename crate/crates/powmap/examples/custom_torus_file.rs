//! Limits for a user-supplied group described by its torus table.
//!
//! Any connected reductive group works once its maximal-torus data is
//! known: for each torus class, the Weyl-centralizer order and the cyclic
//! factor orders as integer polynomials in q (coefficient arrays, index =
//! degree). This example writes the five torus classes of a split rank-2
//! symplectic-type group, loads them through the strict JSON loader, and
//! evaluates the M = 2 limit on both residue classes. The loader enforces
//! the class equation `sum 1/|W_T| = 1`, so a mistyped table fails fast.
//!
//! The same document drives the command line:
//! `powmap limit --family custom --tori sp4.json --M 2 --residue 1`.
//!
//! Run with: `cargo run --example custom_torus_file`

use powmap::asymptotics::limit_proportion_residue;
use powmap::tori::load_custom_tori;

const SP4_TABLE: &str = r#"{
    "name": "Sp(4) split",
    "rank": 2,
    "tori": [
        {"weyl_order": 8, "factors": [[-1, 1], [-1, 1]]},
        {"weyl_order": 8, "factors": [[1, 1], [1, 1]]},
        {"weyl_order": 4, "factors": [[1, 1], [-1, 1]]},
        {"weyl_order": 4, "factors": [[-1, 0, 1]]},
        {"weyl_order": 4, "factors": [[1, 0, 1]]}
    ]
}"#;

fn main() -> powmap::Result<()> {
    // The five maximal tori of Sp(4, F_q): (q-1)^2, (q+1)^2, (q+1)(q-1),
    // q^2 - 1 and q^2 + 1, with centralizer orders 8, 8, 4, 4, 4 in the
    // Weyl group of order 8 (1/8 + 1/8 + 1/4 + 1/4 + 1/4 = 1).
    let sp4 = load_custom_tori(SP4_TABLE)?;

    for residue in [1, 0] {
        let report = limit_proportion_residue(&sp4, 2, residue)?;
        println!(
            "{}, M = 2, {}:",
            report.family,
            report.point.describe(report.m)
        );
        for term in &report.terms {
            println!(
                "  {:<4} {:<24} |W_T| = {}  term = {}",
                term.label, term.structure, term.weyl_order, term.term
            );
        }
        println!("  limit = {}\n", report.value);
    }

    // A wrong table is rejected rather than silently producing numbers:
    // halving one centralizer order breaks the class equation.
    let broken = SP4_TABLE.replacen("\"weyl_order\": 4", "\"weyl_order\": 2", 1);
    match load_custom_tori(&broken) {
        Err(err) => println!("tampered table rejected: {err}"),
        Ok(_) => unreachable!("the class equation cannot hold for the tampered table"),
    }
    Ok(())
}
