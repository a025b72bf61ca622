//! Brute-force ground truth: explicit finite fields, exhaustive group
//! enumeration, element classification, and exact power-map censuses for
//! GL(n,q), SL(n,q) and U(n,q) at small parameters.
//!
//! Everything here is deliberately independent of the torus-sum formulas in
//! [`crate::asymptotics`]: a census enumerates every group element, raises
//! it to the M-th power, and classifies it by its characteristic and
//! minimal polynomials. The only shared input is the closed-form group
//! order (used to size caps and cross-check enumeration), so agreement
//! between a census and a limit formula is evidence, not circularity.

pub mod census;
pub mod enumerate;
pub mod field;
pub mod matrix;
pub mod poly;

pub use census::{
    abelian_census, abelian_census_counts, census, CensusCounts, CensusOptions,
    DEFAULT_ABELIAN_CAP, DEFAULT_GROUP_CAP,
};
pub use enumerate::{GroupCtx, SHARD_COUNT};
pub use field::{FiniteField, DEFAULT_FIELD_CAP};
pub use matrix::{classify, Classification, Matrix};
pub use poly::FieldPoly;
