//! When is x -> x^M onto GL(n, q)?
//!
//! For prime M the power map is surjective exactly when the group has no
//! element of order M, i.e. `gcd(M, |GL(n,q)|) = 1`. Away from the
//! characteristic that unwinds to a clean arithmetic test: the
//! multiplicative order of q mod M must exceed n. This example prints the
//! verdict over a small (n, q) grid for M = 5 and checks that the two
//! criteria agree on every cell.
//!
//! Run with: `cargo run --example surjectivity`

use powmap::asymptotics::{is_surjective, surjectivity_report};

fn main() -> powmap::Result<()> {
    let m = 5;
    let qs: [u64; 10] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16];

    println!("x -> x^{m} onto GL(n, q)?  (s = surjective, . = not)\n");
    print!("{:>4}", "n\\q");
    for q in qs {
        print!("{q:>4}");
    }
    println!();
    for n in 1..=6 {
        print!("{n:>4}");
        for q in qs {
            let report = surjectivity_report(n, q, m)?;
            assert_eq!(report.surjective, report.by_group_order);
            assert_eq!(report.surjective, is_surjective(n, q, m)?);
            // away from the characteristic the order test says the same
            if report.gcd_m_q == 1 {
                assert_eq!(report.surjective, report.by_order);
            }
            print!("{:>4}", if report.surjective { "s" } else { "." });
        }
        println!();
    }

    // One cell in detail: q = 3 has order 4 modulo 5, so fifth powers cover
    // GL(3, 3) (order 4 > n = 3) but not GL(4, 3).
    println!();
    for n in [3, 4] {
        let report = surjectivity_report(n, 3, m)?;
        println!(
            "GL({n}, 3): ord(3 mod {m}) = {}, |GL| = {}, gcd(M, |GL|) = {} -> {}",
            report.order_of_q.expect("5 does not divide 3"),
            report.group_order,
            report.gcd_m_group_order,
            if report.surjective { "onto" } else { "not onto" }
        );
    }

    // In the defining characteristic (M | q) the Frobenius soaks up the
    // p-part only for n = 1, where the group is the cyclic C_{q-1}.
    let frob = surjectivity_report(1, 5, m)?;
    println!(
        "GL(1, 5): gcd(M, q) = {}, gcd(M, |GL|) = {} -> {}",
        frob.gcd_m_q,
        frob.gcd_m_group_order,
        if frob.surjective { "onto" } else { "not onto" }
    );
    Ok(())
}
