//! Exact asymptotics of power maps on finite reductive groups.
//!
//! For a connected reductive group `G` over a finite field and an integer
//! `M >= 2`, the image of the power map `x -> x^M` occupies, in the limit of
//! large field size `q`, a proportion of the group that is an exact rational
//! number: a sum over the conjugacy classes of maximal tori of
//! `1 / (|W_T| * (M,d_1) ... (M,d_s))`, where `C_{d_1} x ... x C_{d_s}` is the
//! cyclic structure of the torus and `|W_T|` the order of its Weyl-group
//! centralizer. This crate evaluates that sum exactly for `GL(n,q)`,
//! `SL(n,q)`, `U(n,q)` and user-supplied torus tables, classifies all
//! subsequential limits for prime `M`, decides surjectivity of the power map,
//! and cross-checks every formula against a brute-force matrix-group census
//! at small parameters.
//!
//! The crate is organised around the pipeline:
//!
//! - [`partitions`]: integer partitions and the centralizer orders
//!   `prod m_i! i^{m_i}` that weight each torus class.
//! - [`qpoly`]: torus cyclic-factor orders as integer polynomials in `q`,
//!   with gcd evaluation both at concrete `q` and per residue `q mod M`.
//! - [`tori`]: torus class tables for the built-in families plus a strict
//!   JSON loader for custom groups.
//! - [`asymptotics`]: the limit formula, subsequential-limit classification,
//!   surjectivity, and the abelian power ratio.
//! - [`oracle`]: explicit finite fields and matrix-group enumeration giving
//!   exact element censuses to verify the formulas against.
//! - [`cli`]: the `powmap` command-line surface (table / JSON / CSV output).
//!
//! Everything numeric is exact: arbitrary-precision integers and reduced
//! fractions, no floating point in any formula path.

pub mod arith;
pub mod asymptotics;
pub mod cli;
pub mod error;
pub mod oracle;
pub mod partitions;
pub mod qpoly;
pub mod rational;
pub mod tori;

pub use error::{Error, Result};
pub use rational::ExactRational;
