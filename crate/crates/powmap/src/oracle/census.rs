//! Exact power-map censuses by exhaustive enumeration.
//!
//! A census makes two passes over the group. The first classifies every
//! element (for the `total_*` counts) and records the set key of its M-th
//! power; the sorted, deduplicated keys are the power image. The second
//! pass classifies the elements whose key lies in that image, giving the
//! `power_*` counts. Both passes fan the 64 first-row shards out to worker
//! threads and merge per-shard results in shard order, so the outcome is
//! identical for any thread count.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::enumerate::{GroupCtx, SHARD_COUNT};
use super::matrix::classify;
use crate::arith::mulmod;
use crate::rational::ratio;
use crate::tori::GroupFamily;
use crate::{Error, ExactRational, Result};

/// Default refusal threshold for the matrix-group order.
pub const DEFAULT_GROUP_CAP: u64 = 10_000_000;
/// Default refusal threshold for the abelian-group order.
pub const DEFAULT_ABELIAN_CAP: u64 = 1_000_000;

#[derive(Debug, Clone)]
pub struct CensusOptions {
    /// Worker threads; 0 means one per available CPU.
    pub threads: usize,
    /// Refuse groups whose closed-form order exceeds this.
    pub max_order: u64,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            threads: 0,
            max_order: DEFAULT_GROUP_CAP,
        }
    }
}

/// Exact counts from one census of `family` at `(q, M)`.
///
/// The `power_*` fields count M-th powers (the image intersected with each
/// class); the `total_*` fields count the whole class. Every count is over
/// the same group, so proportions share the denominator `group_order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusCounts {
    pub family: GroupFamily,
    pub q: u64,
    pub m: u64,
    pub group_order: u64,
    pub power_image: u64,
    pub power_rs: u64,
    pub power_ss: u64,
    pub power_rg: u64,
    pub total_rs: u64,
    pub total_ss: u64,
    pub total_rg: u64,
}

impl CensusCounts {
    pub fn n(&self) -> u32 {
        self.family
            .n()
            .expect("censuses only run on built-in families")
    }

    pub fn proportion_image(&self) -> ExactRational {
        ratio(self.power_image, self.group_order)
    }

    pub fn proportion_rs(&self) -> ExactRational {
        ratio(self.power_rs, self.group_order)
    }

    pub fn proportion_ss(&self) -> ExactRational {
        ratio(self.power_ss, self.group_order)
    }

    pub fn proportion_rg(&self) -> ExactRational {
        ratio(self.power_rg, self.group_order)
    }
}

/// Run the M-th power census of a built-in family over F_q.
pub fn census(family: &GroupFamily, q: u64, m: u64, opts: &CensusOptions) -> Result<CensusCounts> {
    if m == 0 {
        return Err(Error::Invalid("the power M must be positive".into()));
    }
    let ctx = GroupCtx::new(family, q, opts.max_order)?;
    let order = ctx
        .order()
        .to_u64()
        .expect("order within the cap fits in u64");
    let threads = worker_count(opts.threads);
    let f = ctx.field();
    let qf = f.order();

    struct Phase1 {
        count: u64,
        rs: u64,
        ss: u64,
        rg: u64,
        keys: Vec<u128>,
    }
    let phase1 = run_sharded(threads, |shard| {
        let mut out = Phase1 {
            count: 0,
            rs: 0,
            ss: 0,
            rg: 0,
            keys: Vec::new(),
        };
        ctx.for_each_in_shard(shard, &mut |g| {
            out.count += 1;
            let cls = classify(f, g);
            out.rs += cls.is_rs as u64;
            out.ss += cls.is_ss as u64;
            out.rg += cls.is_rg as u64;
            out.keys.push(g.pow(f, m).key(qf));
        });
        out.keys.sort_unstable();
        out.keys.dedup();
        out
    });

    let mut enumerated = 0u64;
    let (mut total_rs, mut total_ss, mut total_rg) = (0u64, 0u64, 0u64);
    let mut image: Vec<u128> = Vec::new();
    for shard in phase1 {
        enumerated += shard.count;
        total_rs += shard.rs;
        total_ss += shard.ss;
        total_rg += shard.rg;
        image.extend(shard.keys);
    }
    assert_eq!(
        enumerated, order,
        "enumeration must match the closed-form group order"
    );
    image.sort_unstable();
    image.dedup();
    let power_image = image.len() as u64;

    struct Phase2 {
        hits: u64,
        rs: u64,
        ss: u64,
        rg: u64,
    }
    let image = &image;
    let phase2 = run_sharded(threads, |shard| {
        let mut out = Phase2 {
            hits: 0,
            rs: 0,
            ss: 0,
            rg: 0,
        };
        ctx.for_each_in_shard(shard, &mut |g| {
            if image.binary_search(&g.key(qf)).is_ok() {
                out.hits += 1;
                let cls = classify(f, g);
                out.rs += cls.is_rs as u64;
                out.ss += cls.is_ss as u64;
                out.rg += cls.is_rg as u64;
            }
        });
        out
    });

    let (mut hits, mut power_rs, mut power_ss, mut power_rg) = (0u64, 0u64, 0u64, 0u64);
    for shard in phase2 {
        hits += shard.hits;
        power_rs += shard.rs;
        power_ss += shard.ss;
        power_rg += shard.rg;
    }
    assert_eq!(hits, power_image, "every image key is a group element");

    Ok(CensusCounts {
        family: family.clone(),
        q,
        m,
        group_order: order,
        power_image,
        power_rs,
        power_ss,
        power_rg,
        total_rs,
        total_ss,
        total_rg,
    })
}

fn worker_count(requested: usize) -> usize {
    let n = if requested == 0 {
        thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
    } else {
        requested
    };
    n.clamp(1, SHARD_COUNT)
}

/// Run `work(shard)` for every shard id across `threads` workers and return
/// the results in shard order. Workers claim shards from a shared counter;
/// since each shard's result is deterministic and the merge respects shard
/// order, scheduling cannot affect the combined output.
fn run_sharded<T, W>(threads: usize, work: W) -> Vec<T>
where
    T: Send,
    W: Fn(usize) -> T + Sync,
{
    let results: Vec<Mutex<Option<T>>> = (0..SHARD_COUNT).map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let shard = next.fetch_add(1, Ordering::Relaxed);
                if shard >= SHARD_COUNT {
                    break;
                }
                let value = work(shard);
                *results[shard].lock().unwrap() = Some(value);
            });
        }
    });
    results
        .into_iter()
        .map(|cell| cell.into_inner().unwrap().expect("every shard completed"))
        .collect()
}

/// Power image of C_{d₁} × … × C_{d_s} under x ↦ Mx, as (image size, order).
pub fn abelian_census_counts(factors: &[u64], m: u64) -> Result<(u64, u64)> {
    if factors.contains(&0) {
        return Err(Error::Invalid("cyclic factors must be positive".into()));
    }
    let mut order = 1u64;
    for &d in factors {
        order = order
            .checked_mul(d)
            .filter(|&o| o <= DEFAULT_ABELIAN_CAP)
            .ok_or_else(|| Error::CapExceeded {
                what: "abelian group order",
                predicted: factors.iter().map(|&d| BigUint::from(d)).product(),
                cap: DEFAULT_ABELIAN_CAP,
            })?;
    }
    let mut hit = vec![false; order as usize];
    for t in 0..order {
        let mut rem = t;
        let mut idx = 0u64;
        let mut stride = 1u64;
        for &d in factors {
            let x = rem % d;
            rem /= d;
            idx += mulmod(m % d, x, d) * stride;
            stride *= d;
        }
        hit[idx as usize] = true;
    }
    let image = hit.iter().filter(|&&b| b).count() as u64;
    Ok((image, order))
}

/// The exact proportion of M-th powers in C_{d₁} × … × C_{d_s}.
pub fn abelian_census(factors: &[u64], m: u64) -> Result<ExactRational> {
    let (image, order) = abelian_census_counts(factors, m)?;
    Ok(ratio(image, order))
}
