//! Conjugacy classes of maximal tori and the group families that own them.
//!
//! For `GL(n,q)`, `SL(n,q)` and `U(n,q)` the classes are parametrized by the
//! partitions of `n` and generated here from the partition list; nothing is
//! hard-coded beyond the factor shapes. A partition
//! `lambda = (n_1, ..., n_s)` yields the torus
//!
//! - `GL`: `C_{q^{n_1}-1} x ... x C_{q^{n_s}-1}`;
//! - `U`:  `C_{q^{n_1}-(-1)^{n_1}} x ... x C_{q^{n_s}-(-1)^{n_s}}`;
//! - `SL`: as `GL` but with the factor of the last (smallest) part divided
//!   by `q - 1`, i.e. replaced by `1 + q + ... + q^{n_s - 1}`;
//!
//! each weighted by `|W_T| = prod m_i! i^{m_i}`, the centralizer order of
//! the cycle type. Any other reductive group can be supplied as a custom
//! torus table in JSON; tables are validated against the class equation
//! `sum 1/|W_T| = 1` before use.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{centralizer_order, enumerate_partitions, Partition};
use crate::qpoly::QPoly;
use crate::rational::ExactRational;

/// One conjugacy class of maximal tori: the orders of its cyclic factors as
/// polynomials in `q`, and the order of `W_T = N_G(T)/T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusClass {
    pub factors: Vec<QPoly>,
    pub weyl_order: BigUint,
    /// The indexing partition for the built-in families; `None` for custom
    /// tables.
    pub label: Option<Partition>,
}

impl TorusClass {
    /// Label used in reports: the partition when present, else a 1-based
    /// positional marker.
    pub fn display_label(&self, index: usize) -> String {
        match &self.label {
            Some(p) => p.label(),
            None => format!("#{}", index + 1),
        }
    }

    /// Cyclic structure as text, e.g. `C(q^2 - 1) x C(q - 1)`.
    pub fn structure(&self) -> String {
        let parts: Vec<String> = self.factors.iter().map(|f| format!("C({f})")).collect();
        parts.join(" x ")
    }
}

/// A custom reductive group described purely by its torus table. The rank
/// must be stated explicitly because the cyclic-factor count of a torus can
/// be smaller than the rank (an anisotropic `GL(2)` torus is a single cyclic
/// group of rank 2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CustomGroup {
    pub name: String,
    pub rank: u32,
    pub tori: Vec<TorusClass>,
}

/// The group families the tool understands. `GL`, `SL` and `U` generate
/// their torus tables from partitions; `Custom` carries a user-supplied
/// table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupFamily {
    Gl { n: u32 },
    Sl { n: u32 },
    U { n: u32 },
    Custom(CustomGroup),
}

impl GroupFamily {
    pub fn gl(n: u32) -> Result<Self> {
        require_positive_n(n)?;
        Ok(GroupFamily::Gl { n })
    }

    pub fn sl(n: u32) -> Result<Self> {
        require_positive_n(n)?;
        Ok(GroupFamily::Sl { n })
    }

    pub fn u(n: u32) -> Result<Self> {
        require_positive_n(n)?;
        Ok(GroupFamily::U { n })
    }

    /// Rank of the group: `n` for `GL` and `U`, `n - 1` for `SL`, explicit
    /// for custom tables.
    pub fn rank(&self) -> u32 {
        match self {
            GroupFamily::Gl { n } | GroupFamily::U { n } => *n,
            GroupFamily::Sl { n } => n - 1,
            GroupFamily::Custom(c) => c.rank,
        }
    }

    pub fn n(&self) -> Option<u32> {
        match self {
            GroupFamily::Gl { n } | GroupFamily::Sl { n } | GroupFamily::U { n } => Some(*n),
            GroupFamily::Custom(_) => None,
        }
    }
}

impl std::fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupFamily::Gl { n } => write!(f, "GL({n})"),
            GroupFamily::Sl { n } => write!(f, "SL({n})"),
            GroupFamily::U { n } => write!(f, "U({n})"),
            GroupFamily::Custom(c) => f.write_str(&c.name),
        }
    }
}

fn require_positive_n(n: u32) -> Result<()> {
    if n == 0 {
        Err(Error::Invalid("n must be positive".into()))
    } else {
        Ok(())
    }
}

/// The conjugacy classes of maximal tori of `f`, one per partition of `n`
/// for the built-in families (in the canonical reverse-lexicographic
/// partition order), or the validated custom table.
pub fn torus_classes(f: &GroupFamily) -> Result<Vec<TorusClass>> {
    let classes = match f {
        GroupFamily::Gl { n } => partition_classes(*n, QPoly::q_pow_minus_one),
        GroupFamily::U { n } => partition_classes(*n, QPoly::q_pow_minus_sign),
        GroupFamily::Sl { n } => enumerate_partitions(*n)
            .into_iter()
            .map(|p| {
                let parts = p.parts();
                let mut factors: Vec<QPoly> = parts
                    .iter()
                    .take(parts.len() - 1)
                    .map(|&part| QPoly::q_pow_minus_one(part))
                    .collect();
                // determinant-1 quotient lands on the last (smallest) part
                factors.push(QPoly::geometric_sum(parts[parts.len() - 1]));
                let weyl_order = centralizer_order(&p);
                TorusClass {
                    factors,
                    weyl_order,
                    label: Some(p),
                }
            })
            .collect(),
        GroupFamily::Custom(c) => c.tori.clone(),
    };
    validate_classes(&classes)?;
    Ok(classes)
}

fn partition_classes(n: u32, factor: impl Fn(u32) -> QPoly) -> Vec<TorusClass> {
    enumerate_partitions(n)
        .into_iter()
        .map(|p| {
            let factors = p.parts().iter().map(|&part| factor(part)).collect();
            let weyl_order = centralizer_order(&p);
            TorusClass {
                factors,
                weyl_order,
                label: Some(p),
            }
        })
        .collect()
}

/// Structural validation shared by built-in and custom tables: nonempty
/// factor lists, nonzero factor polynomials, positive Weyl orders, and the
/// class equation `sum 1/weyl_order = 1`.
pub fn validate_classes(classes: &[TorusClass]) -> Result<()> {
    if classes.is_empty() {
        return Err(Error::TorusFile("torus list is empty".into()));
    }
    for (i, class) in classes.iter().enumerate() {
        if class.weyl_order.is_zero() {
            return Err(Error::TorusFile(format!(
                "torus #{}: weyl_order must be positive",
                i + 1
            )));
        }
        if class.factors.is_empty() {
            return Err(Error::TorusFile(format!(
                "torus #{}: factor list is empty",
                i + 1
            )));
        }
        if class.factors.iter().any(|f| f.is_zero()) {
            return Err(Error::TorusFile(format!(
                "torus #{}: zero polynomial is not a cyclic-factor order",
                i + 1
            )));
        }
    }
    let total: ExactRational = classes
        .iter()
        .map(|c| ExactRational::new(BigInt::one(), BigInt::from(c.weyl_order.clone())))
        .sum();
    if !total.is_one() {
        return Err(Error::ClassEquation {
            got: total.to_string(),
        });
    }
    Ok(())
}

/// Wire format of a custom torus file. Parsing is strict: unknown keys are
/// rejected, every factor is a coefficient array (index = degree).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TorusFile {
    pub name: String,
    pub rank: u32,
    pub tori: Vec<TorusFileEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TorusFileEntry {
    pub weyl_order: u64,
    pub factors: Vec<QPoly>,
}

/// Parses and validates a custom torus document, returning a `Custom`
/// family on success.
pub fn load_custom_tori(document: &str) -> Result<GroupFamily> {
    let file: TorusFile =
        serde_json::from_str(document).map_err(|e| Error::TorusFile(e.to_string()))?;
    if file.rank == 0 {
        return Err(Error::TorusFile("rank must be positive".into()));
    }
    let tori: Vec<TorusClass> = file
        .tori
        .into_iter()
        .map(|entry| TorusClass {
            factors: entry.factors,
            weyl_order: BigUint::from(entry.weyl_order),
            label: None,
        })
        .collect();
    validate_classes(&tori)?;
    Ok(GroupFamily::Custom(CustomGroup {
        name: file.name,
        rank: file.rank,
        tori,
    }))
}

/// `|GL(n,q)| = q^{n(n-1)/2} * prod_{i=1..n} (q^i - 1)`.
pub fn gl_order(n: u32, q: u64) -> BigUint {
    let q = BigUint::from(q);
    let mut order = q.pow(n * (n - 1) / 2);
    for i in 1..=n {
        order *= q.pow(i) - BigUint::one();
    }
    order
}

/// `|SL(n,q)| = |GL(n,q)| / (q - 1)`.
pub fn sl_order(n: u32, q: u64) -> BigUint {
    gl_order(n, q) / (BigUint::from(q) - BigUint::one())
}

/// `|U(n,q)| = q^{n(n-1)/2} * prod_{i=1..n} (q^i - (-1)^i)`.
pub fn u_order(n: u32, q: u64) -> BigUint {
    let q = BigUint::from(q);
    let mut order = q.pow(n * (n - 1) / 2);
    for i in 1..=n {
        if i % 2 == 0 {
            order *= q.pow(i) - BigUint::one();
        } else {
            order *= q.pow(i) + BigUint::one();
        }
    }
    order
}
