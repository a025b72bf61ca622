//! Error type shared across the crate.

use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Parameter validation failed (bad range, wrong family, composite M
    /// where a prime is required, and so on).
    #[error("invalid parameter: {0}")]
    Invalid(String),

    /// `q` is not a prime power.
    #[error("q = {0} is not a prime power")]
    NotPrimePower(u64),

    /// A torus cyclic-factor polynomial evaluated to a non-positive value,
    /// so it cannot be the order of a cyclic group at this `q`.
    #[error("torus factor {factor} is not positive at q = {q}")]
    NonPositiveFactor { factor: String, q: u64 },

    /// The weights `1/|W_T|` of a torus table do not sum to 1, which means
    /// the table is incomplete or wrong.
    #[error("class equation violated: sum of 1/weyl_order is {got}, expected 1")]
    ClassEquation { got: String },

    /// A custom torus document failed schema or invariant validation.
    #[error("invalid torus file: {0}")]
    TorusFile(String),

    /// An enumeration request exceeds the configured resource cap.
    #[error("{what} {predicted} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        predicted: BigUint,
        cap: u64,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors that should map to the resource-cap exit code.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
