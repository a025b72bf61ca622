//! The q -> -q duality between general linear and unitary limits.
//!
//! The torus data of U(n) is GL(n)'s with q replaced by -q: a partition
//! lambda contributes factors `q^{lambda_i} - (-1)^{lambda_i}` instead of
//! `q^{lambda_i} - 1`. Since the limit value along a residue class only
//! sees the factors modulo M, the U(n) limit along q ≡ r (mod M) equals
//! the GL(n) limit along q ≡ -r (mod M). This example prints the matched
//! columns for n = 3, M = 7 and then checks the identity across a grid of
//! sizes, exponents (composite ones included) and residues.
//!
//! Run with: `cargo run --example ennola_duality`

use powmap::asymptotics::limit_proportion_residue;
use powmap::tori::GroupFamily;

fn main() -> powmap::Result<()> {
    let m = 7;
    let gl3 = GroupFamily::gl(3)?;
    let u3 = GroupFamily::u(3)?;

    println!("M = {m}: U(3) at q ≡ r matches GL(3) at q ≡ -r\n");
    println!("{:>3}  {:>12}  {:>12}", "r", "U(3) at r", "GL(3) at -r");
    for r in 0..m {
        let u_value = limit_proportion_residue(&u3, m, r)?.value;
        let gl_value = limit_proportion_residue(&gl3, m, (m - r) % m)?.value;
        println!(
            "{:>3}  {:>12}  {:>12}",
            r,
            u_value.to_string(),
            gl_value.to_string()
        );
        assert_eq!(u_value, gl_value);
    }

    // The duality is an identity of torus tables, not of any particular
    // M, so composite exponents satisfy it too.
    let mut checked = 0;
    for n in 1..=5 {
        let gl = GroupFamily::gl(n)?;
        let u = GroupFamily::u(n)?;
        for m in 2..=9 {
            for r in 0..m {
                let u_value = limit_proportion_residue(&u, m, r)?.value;
                let gl_value = limit_proportion_residue(&gl, m, (m - r) % m)?.value;
                assert_eq!(u_value, gl_value, "n = {n}, M = {m}, r = {r}");
                checked += 1;
            }
        }
    }
    println!("\nidentity verified on {checked} (n, M, r) triples");
    Ok(())
}
