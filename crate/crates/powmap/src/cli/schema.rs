//! Serializable output records — the machine-readable JSON schemas.
//!
//! Field order in the emitted JSON is declaration order here; rationals are
//! `{num, den}` pairs of decimal strings (the numerator carries the sign),
//! and counts are decimal strings so consumers never need wide integers.
//! Every record deserializes back into the same type, and re-rendering a
//! parsed record reproduces the original bytes — the integration tests pin
//! that round-trip.

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::asymptotics::{EvalPoint, LimitReport, SubsequentialLimits, SurjectivityReport};
use crate::oracle::CensusCounts;
use crate::rational::decimal_string;
use crate::ExactRational;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// An exact fraction; `num` may be negative, `den` is always positive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FracOut {
    pub num: String,
    pub den: String,
}

impl FracOut {
    pub fn new(x: &ExactRational) -> Self {
        FracOut {
            num: x.numer().to_string(),
            den: x.denom().to_string(),
        }
    }

    /// `num/den`, shortened to `num` for integers.
    pub fn display(&self) -> String {
        if self.den == "1" {
            self.num.clone()
        } else {
            format!("{}/{}", self.num, self.den)
        }
    }
}

/// One torus class's line in a limit report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermOut {
    pub torus: String,
    pub structure: String,
    pub weyl_order: String,
    pub gcds: Vec<u64>,
    pub term: FracOut,
}

/// Output of `limit`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitOut {
    pub command: String,
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub m: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residue: Option<u64>,
    pub value: FracOut,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decimal: Option<String>,
    pub terms: Vec<TermOut>,
}

impl LimitOut {
    pub fn new(report: &LimitReport, decimals: Option<u32>) -> Self {
        let (q, residue) = match report.point {
            EvalPoint::PrimePower(q) => (Some(q), None),
            EvalPoint::Residue(r) => (None, Some(r)),
        };
        LimitOut {
            command: "limit".into(),
            family: report.family.to_string(),
            n: report.family.n(),
            m: report.m,
            q,
            residue,
            value: FracOut::new(&report.value),
            decimal: decimals.map(|k| decimal_string(&report.value, k)),
            terms: report
                .terms
                .iter()
                .map(|t| TermOut {
                    torus: t.label.clone(),
                    structure: t.structure.clone(),
                    weyl_order: t.weyl_order.to_string(),
                    gcds: t.gcds.clone(),
                    term: FracOut::new(&t.term),
                })
                .collect(),
        }
    }
}

/// One subsequential-limit entry of `limits-all`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryOut {
    pub condition: String,
    /// `ord(q mod M)` for the order-condition entries; absent for `M | q`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<u64>,
    pub value: FracOut,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decimal: Option<String>,
}

/// Output of `limits-all`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitsAllOut {
    pub command: String,
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub m: u64,
    pub entries: Vec<EntryOut>,
    pub distinct_values: Vec<FracOut>,
    pub distinct_count: usize,
    /// Condition pairs sharing a value below 1 (expected empty).
    pub collisions: Vec<[String; 2]>,
}

impl LimitsAllOut {
    pub fn new(limits: &SubsequentialLimits, decimals: Option<u32>) -> Self {
        LimitsAllOut {
            command: "limits-all".into(),
            family: limits.family.to_string(),
            n: limits.family.n(),
            m: limits.m,
            entries: limits
                .entries
                .iter()
                .map(|e| EntryOut {
                    condition: e.condition.clone(),
                    order: e.order,
                    value: FracOut::new(&e.value),
                    decimal: decimals.map(|k| decimal_string(&e.value, k)),
                })
                .collect(),
            distinct_values: limits.distinct_values.iter().map(FracOut::new).collect(),
            distinct_count: limits.distinct_count(),
            collisions: limits
                .collisions
                .iter()
                .map(|(a, b)| [a.clone(), b.clone()])
                .collect(),
        }
    }
}

/// Output of `census`: the eight exact counts, the four proportions, the
/// limit value at this `q`, and the signed deviations proportion − limit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusOut {
    pub command: String,
    pub version: String,
    pub family: String,
    pub n: u32,
    pub q: u64,
    pub m: u64,
    pub group_order: String,
    pub power_image: String,
    pub power_rs: String,
    pub power_ss: String,
    pub power_rg: String,
    pub total_rs: String,
    pub total_ss: String,
    pub total_rg: String,
    pub proportion_image: FracOut,
    pub proportion_rs: FracOut,
    pub proportion_ss: FracOut,
    pub proportion_rg: FracOut,
    pub limit_value: FracOut,
    pub deviation_image: FracOut,
    pub deviation_rs: FracOut,
    pub deviation_ss: FracOut,
    pub deviation_rg: FracOut,
}

impl CensusOut {
    pub fn new(counts: &CensusCounts, limit: &ExactRational) -> Self {
        let dev = |p: ExactRational| FracOut::new(&(p - limit));
        CensusOut {
            command: "census".into(),
            version: TOOL_VERSION.into(),
            family: counts.family.to_string(),
            n: counts.n(),
            q: counts.q,
            m: counts.m,
            group_order: counts.group_order.to_string(),
            power_image: counts.power_image.to_string(),
            power_rs: counts.power_rs.to_string(),
            power_ss: counts.power_ss.to_string(),
            power_rg: counts.power_rg.to_string(),
            total_rs: counts.total_rs.to_string(),
            total_ss: counts.total_ss.to_string(),
            total_rg: counts.total_rg.to_string(),
            proportion_image: FracOut::new(&counts.proportion_image()),
            proportion_rs: FracOut::new(&counts.proportion_rs()),
            proportion_ss: FracOut::new(&counts.proportion_ss()),
            proportion_rg: FracOut::new(&counts.proportion_rg()),
            limit_value: FracOut::new(limit),
            deviation_image: dev(counts.proportion_image()),
            deviation_rs: dev(counts.proportion_rs()),
            deviation_ss: dev(counts.proportion_ss()),
            deviation_rg: dev(counts.proportion_rg()),
        }
    }
}

/// Oracle side of an `abelian` run, present when the order is enumerable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianCensusOut {
    pub image: String,
    pub order: String,
    pub ratio: FracOut,
    pub agrees: bool,
}

/// Output of `abelian`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianOut {
    pub command: String,
    pub factors: Vec<u64>,
    pub m: u64,
    pub formula: FracOut,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub census: Option<AbelianCensusOut>,
}

impl AbelianOut {
    pub fn new(
        factors: &[u64],
        m: u64,
        formula: &ExactRational,
        census: Option<(u64, u64)>,
    ) -> Self {
        AbelianOut {
            command: "abelian".into(),
            factors: factors.to_vec(),
            m,
            formula: FracOut::new(formula),
            census: census.map(|(image, order)| {
                let ratio = crate::rational::ratio(image, order);
                AbelianCensusOut {
                    image: image.to_string(),
                    order: order.to_string(),
                    agrees: &ratio == formula,
                    ratio: FracOut::new(&ratio),
                }
            }),
        }
    }
}

/// Output of `surjective`: the verdict plus both criteria's witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurjectiveOut {
    pub command: String,
    pub n: u32,
    pub q: u64,
    pub m: u64,
    pub surjective: bool,
    pub gcd_m_q: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order_of_q_mod_m: Option<u64>,
    pub group_order: String,
    pub gcd_m_group_order: String,
    pub by_order: bool,
    pub by_group_order: bool,
}

impl SurjectiveOut {
    pub fn new(report: &SurjectivityReport) -> Self {
        SurjectiveOut {
            command: "surjective".into(),
            n: report.n,
            q: report.q,
            m: report.m,
            surjective: report.surjective,
            gcd_m_q: report.gcd_m_q,
            order_of_q_mod_m: report.order_of_q,
            group_order: report.group_order.to_string(),
            gcd_m_group_order: report.gcd_m_group_order.to_string(),
            by_order: report.by_order,
            by_group_order: report.by_group_order,
        }
    }
}

/// One class row of a `verify` run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRowOut {
    pub class: String,
    pub count: String,
    pub proportion: FracOut,
    pub deviation: FracOut,
    pub within: bool,
}

/// Output of `verify`: census vs. limit, gated at `bound / q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOut {
    pub command: String,
    pub family: String,
    pub n: u32,
    pub q: u64,
    pub m: u64,
    pub bound: FracOut,
    pub tolerance: FracOut,
    pub limit_value: FracOut,
    pub rows: Vec<VerifyRowOut>,
    pub pass: bool,
}

impl VerifyOut {
    pub fn new(
        counts: &CensusCounts,
        limit: &ExactRational,
        bound: &ExactRational,
        tolerance: &ExactRational,
    ) -> Self {
        let row = |class: &str, count: u64, proportion: ExactRational| {
            let deviation = proportion.clone() - limit;
            let within = deviation.abs() <= *tolerance;
            VerifyRowOut {
                class: class.into(),
                count: count.to_string(),
                proportion: FracOut::new(&proportion),
                deviation: FracOut::new(&deviation),
                within,
            }
        };
        let rows = vec![
            row("image", counts.power_image, counts.proportion_image()),
            row("regular semisimple", counts.power_rs, counts.proportion_rs()),
            row("semisimple", counts.power_ss, counts.proportion_ss()),
            row("regular", counts.power_rg, counts.proportion_rg()),
        ];
        let pass = rows.iter().all(|r| r.within);
        VerifyOut {
            command: "verify".into(),
            family: counts.family.to_string(),
            n: counts.n(),
            q: counts.q,
            m: counts.m,
            bound: FracOut::new(bound),
            tolerance: FracOut::new(tolerance),
            limit_value: FracOut::new(limit),
            rows,
            pass,
        }
    }
}
