//! The limiting proportion of M-th powers and everything derived from it.
//!
//! The central quantity is
//!
//! ```text
//! lim_{q -> inf} |G(q)^M| / |G(q)|  =  sum_T 1 / (|W_T| * (M,d_1) ... (M,d_s))
//! ```
//!
//! where `T` runs over the conjugacy classes of maximal tori with cyclic
//! factors of orders `d_1, ..., d_s` (polynomials in `q`) and `(M,d)` is a
//! gcd. Because each gcd depends only on `q mod M`, the limit is a function
//! of the residue class of `q`; [`limit_proportion`] evaluates at a concrete
//! prime power, [`limit_proportion_residue`] along a residue class. The same
//! value is the limiting proportion within the regular semisimple,
//! semisimple and regular elements.
//!
//! On top of the limit sit three classifiers:
//! [`subsequential_limits`] enumerates the finitely many limit values for a
//! prime exponent (one per possible multiplicative order of `q` mod `M`),
//! [`surjectivity_report`] decides whether `x -> x^M` is onto `GL(n,q)`,
//! and [`abelian_power_ratio`] gives the one-line answer for a finite
//! abelian group.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{divisors, is_prime, multiplicative_order, prime_power};
use crate::error::{Error, Result};
use crate::partitions::{centralizer_order, enumerate_partitions, pi_a, pi_prime_a};
use crate::qpoly::{gcd_with_m_at, gcd_with_m_residue};
use crate::rational::{recip, ExactRational};
use crate::tori::{gl_order, torus_classes, GroupFamily};

/// Where a limit is evaluated: at a concrete prime power `q`, or along the
/// residue class `q ≡ r (mod M)` as `q -> inf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalPoint {
    PrimePower(u64),
    Residue(u64),
}

impl EvalPoint {
    /// Human label; needs the exponent to spell out the residue class.
    pub fn describe(&self, m: u64) -> String {
        match self {
            EvalPoint::PrimePower(q) => format!("q = {q}"),
            EvalPoint::Residue(r) => format!("q = {r} (mod {m})"),
        }
    }
}

/// One torus class's contribution to the limit.
#[derive(Debug, Clone)]
pub struct TorusTerm {
    /// Partition label for built-in families, positional for custom tables.
    pub label: String,
    /// Cyclic structure, e.g. `C(q^2 - 1) x C(q - 1)`.
    pub structure: String,
    pub weyl_order: BigUint,
    /// gcd of M with each cyclic-factor order, in factor order.
    pub gcds: Vec<u64>,
    /// `1 / (weyl_order * prod gcds)`.
    pub term: ExactRational,
}

/// The limit with its full per-torus breakdown. `value` is exactly the sum
/// of the `term` fields.
#[derive(Debug, Clone)]
pub struct LimitReport {
    pub family: GroupFamily,
    pub m: u64,
    pub point: EvalPoint,
    pub terms: Vec<TorusTerm>,
    pub value: ExactRational,
}

fn validate_m(m: u64) -> Result<()> {
    if m < 2 {
        return Err(Error::Invalid(format!("M = {m}; the exponent must be at least 2")));
    }
    Ok(())
}

fn build_report(f: &GroupFamily, m: u64, point: EvalPoint) -> Result<LimitReport> {
    let classes = torus_classes(f)?;
    let mut terms = Vec::with_capacity(classes.len());
    let mut value = ExactRational::zero();
    for (i, class) in classes.iter().enumerate() {
        let gcds = class
            .factors
            .iter()
            .map(|factor| match point {
                EvalPoint::PrimePower(q) => gcd_with_m_at(factor, m, q),
                EvalPoint::Residue(r) => Ok(gcd_with_m_residue(factor, m, r)),
            })
            .collect::<Result<Vec<u64>>>()?;
        let mut den = class.weyl_order.clone();
        for &g in &gcds {
            den *= g;
        }
        let term = recip(&den);
        value += term.clone();
        terms.push(TorusTerm {
            label: class.display_label(i),
            structure: class.structure(),
            weyl_order: class.weyl_order.clone(),
            gcds,
            term,
        });
    }
    Ok(LimitReport {
        family: f.clone(),
        m,
        point,
        terms,
        value,
    })
}

/// The limiting proportion of M-th powers in the family `f`, evaluated with
/// the gcds taken at the concrete prime power `q`. Errors if `q` is not a
/// prime power or if a (custom) factor polynomial is non-positive at `q`.
pub fn limit_proportion(f: &GroupFamily, m: u64, q: u64) -> Result<LimitReport> {
    validate_m(m)?;
    prime_power(q)?;
    build_report(f, m, EvalPoint::PrimePower(q))
}

/// The limiting proportion along the residue class `q ≡ r (mod M)`: the
/// common value of [`limit_proportion`] over all sufficiently large prime
/// powers in the class. Total — every residue has a well-defined value.
pub fn limit_proportion_residue(f: &GroupFamily, m: u64, r: u64) -> Result<LimitReport> {
    validate_m(m)?;
    if r >= m {
        return Err(Error::Invalid(format!("residue {r} is not in [0, {m})")));
    }
    build_report(f, m, EvalPoint::Residue(r))
}

/// One subsequential-limit entry: the arithmetic condition on `q` and the
/// limit value along prime powers satisfying it.
#[derive(Debug, Clone)]
pub struct LimitEntry {
    /// `None` for the `M | q` entry, `Some(a)` when the condition is
    /// `ord(q mod M) = a`.
    pub order: Option<u64>,
    pub condition: String,
    pub value: ExactRational,
}

/// All subsequential limits of the proportion for a prime exponent. The
/// possible orders `a` of `q` in `(Z/MZ)^x` are exactly the divisors of
/// `M - 1`; each divisor contributes one entry, plus the `M | q` entry with
/// value 1.
#[derive(Debug, Clone)]
pub struct SubsequentialLimits {
    pub family: GroupFamily,
    pub m: u64,
    /// `M | q` first, then divisors of `M - 1` ascending.
    pub entries: Vec<LimitEntry>,
    /// Deduplicated entry values, ascending.
    pub distinct_values: Vec<ExactRational>,
    /// Pairs of conditions sharing a value below 1. Entries equal to 1 are
    /// expected to coincide (every gcd is trivial along such classes);
    /// a repeated value below 1 would contradict the expected count and is
    /// surfaced here rather than silently deduplicated.
    pub collisions: Vec<(String, String)>,
}

impl SubsequentialLimits {
    /// Number of distinct limit values.
    pub fn distinct_count(&self) -> usize {
        self.distinct_values.len()
    }
}

/// `ν`: how many divisors of `x` are at most `n`. With `x = M - 1` this
/// counts the orders realizable by a torus factor of `GL(n)`, hence the
/// expected number of distinct sub-1 limit values.
pub fn nu(x: u64, n: u32) -> usize {
    divisors(x).into_iter().filter(|&a| a <= u64::from(n)).count()
}

/// Classifies every subsequential limit of the M-th power proportion for
/// `GL(n)` or `U(n)` with `M` prime, labelled by the arithmetic condition
/// on `q` that realizes it.
///
/// The value along `ord(q mod M) = a` is `Σ_λ 1/(M^{e_a(λ)} |Z(λ)|)` over
/// partitions `λ` of `n`, where `e_a` counts the parts whose torus factor
/// picks up a gcd of `M`: parts divisible by `a` for `GL`; the even/odd
/// twisted count for `U` (for `M = 2` and odd `q` every factor is even, so
/// `e` is the total part count).
pub fn subsequential_limits(f: &GroupFamily, m: u64) -> Result<SubsequentialLimits> {
    if !is_prime(m) {
        return Err(Error::Invalid(format!(
            "M = {m}; the subsequential-limit classification needs a prime exponent"
        )));
    }
    let (n, unitary) = match f {
        GroupFamily::Gl { n } => (*n, false),
        GroupFamily::U { n } => (*n, true),
        other => {
            return Err(Error::Invalid(format!(
                "subsequential limits are classified for GL and U only, not {other}"
            )))
        }
    };

    let partitions = enumerate_partitions(n);
    let mut entries = vec![LimitEntry {
        order: None,
        condition: format!("{m} | q"),
        value: ExactRational::one(),
    }];
    for a in divisors(m - 1) {
        let mut value = ExactRational::zero();
        for p in &partitions {
            let exponent = if !unitary {
                pi_a(p, a as u32)
            } else if m == 2 {
                p.part_count()
            } else {
                pi_prime_a(p, a as u32)
            };
            let den = centralizer_order(p) * BigUint::from(m).pow(exponent);
            value += recip(&den);
        }
        entries.push(LimitEntry {
            order: Some(a),
            condition: format!("ord(q mod {m}) = {a}"),
            value,
        });
    }

    let mut distinct_values: Vec<ExactRational> =
        entries.iter().map(|e| e.value.clone()).collect();
    distinct_values.sort();
    distinct_values.dedup();

    let mut collisions = Vec::new();
    for i in 0..entries.len() {
        for j in i + 1..entries.len() {
            if entries[i].value == entries[j].value && !entries[i].value.is_one() {
                collisions.push((entries[i].condition.clone(), entries[j].condition.clone()));
            }
        }
    }

    Ok(SubsequentialLimits {
        family: f.clone(),
        m,
        entries,
        distinct_values,
        collisions,
    })
}

/// Both surjectivity criteria for `x -> x^M` on `GL(n,q)`, `M` prime.
///
/// The general fact: a prime power map is onto a finite group iff
/// `gcd(M, |G|) = 1`; that is the `surjective` verdict. The order form —
/// `gcd(M, q) = 1` and `ord(q mod M) > n` — is equivalent whenever
/// `gcd(M, q) = 1` or `n ≥ 2`; for `n = 1` with `M | q` the group
/// `GL(1,q) = C_{q-1}` has no unipotent part and the map is onto, which
/// only the gcd form sees.
#[derive(Debug, Clone)]
pub struct SurjectivityReport {
    pub n: u32,
    pub q: u64,
    pub m: u64,
    pub gcd_m_q: u64,
    /// `ord(q mod M)`; `None` when `gcd(M, q) > 1`.
    pub order_of_q: Option<u64>,
    pub group_order: BigUint,
    pub gcd_m_group_order: BigUint,
    /// The order-form verdict: `gcd(M,q) = 1` and `ord(q mod M) > n`.
    pub by_order: bool,
    /// The gcd-form verdict: `gcd(M, |GL(n,q)|) = 1`.
    pub by_group_order: bool,
    pub surjective: bool,
}

/// Evaluates both surjectivity criteria. Errors on composite `M`, `n = 0`,
/// or `q` not a prime power.
pub fn surjectivity_report(n: u32, q: u64, m: u64) -> Result<SurjectivityReport> {
    if n == 0 {
        return Err(Error::Invalid("n must be positive".into()));
    }
    if !is_prime(m) {
        return Err(Error::Invalid(format!(
            "M = {m}; the surjectivity criterion needs a prime exponent"
        )));
    }
    prime_power(q)?;
    let gcd_m_q = m.gcd(&q);
    let order_of_q = (gcd_m_q == 1).then(|| multiplicative_order(q % m, m));
    let by_order = order_of_q.is_some_and(|a| a > u64::from(n));
    let group_order = gl_order(n, q);
    let gcd_m_group_order = BigUint::from(m).gcd(&group_order);
    let by_group_order = gcd_m_group_order.is_one();
    // the forms can only differ in the documented n = 1, M | q corner
    debug_assert!(by_order == by_group_order || (n == 1 && gcd_m_q > 1));
    Ok(SurjectivityReport {
        n,
        q,
        m,
        gcd_m_q,
        order_of_q,
        group_order,
        gcd_m_group_order,
        by_order,
        by_group_order,
        surjective: by_group_order,
    })
}

/// True iff `x -> x^M` is onto `GL(n,q)` (`M` prime).
pub fn is_surjective(n: u32, q: u64, m: u64) -> Result<bool> {
    Ok(surjectivity_report(n, q, m)?.surjective)
}

/// `|H^M| / |H|` for the abelian group `H = C_{d_1} x ... x C_{d_s}`:
/// exactly `1 / (gcd(M,d_1) ... gcd(M,d_s))`.
pub fn abelian_power_ratio(factors: &[u64], m: u64) -> ExactRational {
    assert!(factors.iter().all(|&d| d >= 1), "cyclic orders must be positive");
    let mut den = BigUint::one();
    for &d in factors {
        den *= m.gcd(&d);
    }
    recip(&den)
}

/// Convenience: bare limit value along a residue class.
pub fn limit_value_residue(f: &GroupFamily, m: u64, r: u64) -> Result<ExactRational> {
    Ok(limit_proportion_residue(f, m, r)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::tori::load_custom_tori;

    fn gl(n: u32) -> GroupFamily {
        GroupFamily::gl(n).unwrap()
    }
    fn sl(n: u32) -> GroupFamily {
        GroupFamily::sl(n).unwrap()
    }
    fn u(n: u32) -> GroupFamily {
        GroupFamily::u(n).unwrap()
    }

    fn value_at_residue(f: &GroupFamily, m: u64, r: u64) -> ExactRational {
        limit_proportion_residue(f, m, r).unwrap().value
    }

    #[test]
    fn gl2_squares() {
        assert_eq!(limit_proportion(&gl(2), 2, 3).unwrap().value, ratio(3, 8));
        assert_eq!(limit_proportion(&gl(2), 2, 2).unwrap().value, ratio(1, 1));
        assert_eq!(limit_proportion(&gl(2), 2, 9).unwrap().value, ratio(3, 8));
        assert_eq!(value_at_residue(&gl(2), 2, 1), ratio(3, 8));
        assert_eq!(value_at_residue(&gl(2), 2, 0), ratio(1, 1));
    }

    #[test]
    fn gl2_cubes() {
        assert_eq!(value_at_residue(&gl(2), 3, 0), ratio(1, 1));
        assert_eq!(value_at_residue(&gl(2), 3, 1), ratio(2, 9));
        assert_eq!(value_at_residue(&gl(2), 3, 2), ratio(2, 3));
    }

    #[test]
    fn gl3_squares_and_cubes() {
        assert_eq!(value_at_residue(&gl(3), 2, 1), ratio(5, 16));
        assert_eq!(value_at_residue(&gl(3), 2, 0), ratio(1, 1));
        assert_eq!(value_at_residue(&gl(3), 3, 0), ratio(1, 1));
        assert_eq!(value_at_residue(&gl(3), 3, 1), ratio(14, 81));
        assert_eq!(value_at_residue(&gl(3), 3, 2), ratio(2, 3));
    }

    #[test]
    fn sl2_all_prime_exponents() {
        assert_eq!(value_at_residue(&sl(2), 2, 1), ratio(1, 2));
        for m in [3u64, 5, 7, 11] {
            // the exponent divides q - 1 (r = 1) or q + 1 (r = m - 1)
            assert_eq!(value_at_residue(&sl(2), m, 1), ratio(m + 1, 2 * m));
            assert_eq!(value_at_residue(&sl(2), m, m - 1), ratio(m + 1, 2 * m));
            assert_eq!(value_at_residue(&sl(2), m, 0), ratio(1, 1));
        }
        // coprime to the order of every torus: order of 2 mod 5 is 4 > 2
        assert_eq!(value_at_residue(&sl(2), 5, 2), ratio(1, 1));
    }

    #[test]
    fn u3_squares_and_cubes() {
        assert_eq!(value_at_residue(&u(3), 2, 1), ratio(5, 16));
        assert_eq!(value_at_residue(&u(3), 2, 0), ratio(1, 1));
        assert_eq!(value_at_residue(&u(3), 3, 1), ratio(2, 3));
        assert_eq!(value_at_residue(&u(3), 3, 2), ratio(14, 81));
        assert_eq!(value_at_residue(&u(3), 3, 0), ratio(1, 1));
    }

    #[test]
    fn value_is_sum_of_terms() {
        for f in [gl(4), sl(3), u(4)] {
            for m in 2..=6u64 {
                for r in 0..m {
                    let report = limit_proportion_residue(&f, m, r).unwrap();
                    let total: ExactRational =
                        report.terms.iter().map(|t| t.term.clone()).sum();
                    assert_eq!(report.value, total);
                }
            }
        }
    }

    #[test]
    fn residue_determines_concrete_value() {
        let primes_and_powers = [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27];
        for f in [gl(2), gl(3), sl(2), u(3)] {
            for m in 2..=7u64 {
                for &q in &primes_and_powers {
                    let concrete = limit_proportion(&f, m, q).unwrap().value;
                    let residue = value_at_residue(&f, m, q % m);
                    assert_eq!(concrete, residue, "{f}, M={m}, q={q}");
                }
            }
        }
    }

    #[test]
    fn coprime_exponent_gives_one() {
        // ord(2 mod 5) = 4 > 2, so no GL(2) factor is ever divisible by 5
        assert_eq!(value_at_residue(&gl(2), 5, 2), ratio(1, 1));
        assert_eq!(value_at_residue(&gl(2), 5, 0), ratio(1, 1));
    }

    #[test]
    fn bound_corollary() {
        // 1/M^rank <= value <= 1 for every family and residue
        for n in 1..=8u32 {
            for f in [gl(n), sl(n), u(n)] {
                let rank = f.rank();
                for m in 2..=12u64 {
                    let floor = ExactRational::new(
                        1.into(),
                        num_bigint::BigInt::from(m).pow(rank),
                    );
                    for r in 0..m {
                        let v = value_at_residue(&f, m, r);
                        assert!(v <= ratio(1, 1), "{f} M={m} r={r}: {v} > 1");
                        assert!(v >= floor, "{f} M={m} r={r}: {v} < 1/M^{rank}");
                    }
                }
            }
        }
    }

    #[test]
    fn ennola_duality() {
        // U(n) at residue r matches GL(n) at residue (M - r) mod M
        for n in 1..=8u32 {
            for m in 2..=11u64 {
                for r in 0..m {
                    let dual = (m - r) % m;
                    assert_eq!(
                        value_at_residue(&u(n), m, r),
                        value_at_residue(&gl(n), m, dual),
                        "n={n}, M={m}, r={r}"
                    );
                }
            }
        }
    }

    #[test]
    fn pi_path_matches_residue_path() {
        // two independent routes to the same value: gcds along a residue
        // class vs the partition-statistic formula at a = ord(r mod M)
        for m in [2u64, 3, 5, 7, 11] {
            for n in 1..=8u32 {
                let by_order: Vec<(u64, ExactRational)> = subsequential_limits(&gl(n), m)
                    .unwrap()
                    .entries
                    .iter()
                    .filter_map(|e| e.order.map(|a| (a, e.value.clone())))
                    .collect();
                for r in 1..m {
                    if m.gcd(&r) != 1 {
                        continue;
                    }
                    let a = multiplicative_order(r, m);
                    let formula = &by_order.iter().find(|(o, _)| *o == a).unwrap().1;
                    assert_eq!(&value_at_residue(&gl(n), m, r), formula, "n={n} M={m} r={r}");
                }
            }
        }
    }

    #[test]
    fn unitary_pi_path_matches_residue_path() {
        for m in [3u64, 5, 7, 11] {
            for n in 1..=8u32 {
                let by_order: Vec<(u64, ExactRational)> = subsequential_limits(&u(n), m)
                    .unwrap()
                    .entries
                    .iter()
                    .filter_map(|e| e.order.map(|a| (a, e.value.clone())))
                    .collect();
                for r in 1..m {
                    let a = multiplicative_order(r, m);
                    let formula = &by_order.iter().find(|(o, _)| *o == a).unwrap().1;
                    assert_eq!(&value_at_residue(&u(n), m, r), formula, "n={n} M={m} r={r}");
                }
            }
        }
    }

    #[test]
    fn subsequential_gl2_cubes() {
        let s = subsequential_limits(&gl(2), 3).unwrap();
        assert_eq!(s.entries.len(), 3);
        assert_eq!(s.entries[0].order, None);
        assert_eq!(s.entries[0].value, ratio(1, 1));
        assert_eq!(s.entries[1].order, Some(1));
        assert_eq!(s.entries[1].value, ratio(2, 9));
        assert_eq!(s.entries[2].order, Some(2));
        assert_eq!(s.entries[2].value, ratio(2, 3));
        assert_eq!(
            s.distinct_values,
            vec![ratio(2, 9), ratio(2, 3), ratio(1, 1)]
        );
        assert!(s.collisions.is_empty());
    }

    #[test]
    fn subsequential_gl2_squares() {
        let s = subsequential_limits(&gl(2), 2).unwrap();
        assert_eq!(s.entries.len(), 2);
        assert_eq!(s.entries[1].value, ratio(3, 8));
        assert_eq!(s.distinct_values, vec![ratio(3, 8), ratio(1, 1)]);
    }

    #[test]
    fn subsequential_u3_cubes() {
        let s = subsequential_limits(&u(3), 3).unwrap();
        assert_eq!(
            s.distinct_values,
            vec![ratio(14, 81), ratio(2, 3), ratio(1, 1)]
        );
    }

    #[test]
    fn unitary_squares_match_gl_squares() {
        // along odd q, every unitary factor is even, so M = 2 sees the
        // plain part count — the same value as GL
        for n in 1..=8u32 {
            let gl_s = subsequential_limits(&gl(n), 2).unwrap();
            let u_s = subsequential_limits(&u(n), 2).unwrap();
            assert_eq!(gl_s.entries[1].value, u_s.entries[1].value, "n={n}");
            assert_eq!(
                value_at_residue(&u(n), 2, 1),
                value_at_residue(&gl(n), 2, 1)
            );
        }
    }

    #[test]
    fn distinct_value_counts() {
        // 1 + nu(M-1) distinct values once n admits every divisor
        for m in [2u64, 3, 5, 7] {
            for n in 1..=8u32 {
                let s = subsequential_limits(&gl(n), m).unwrap();
                assert!(s.collisions.is_empty(), "M={m} n={n}: {:?}", s.collisions);
                assert_eq!(
                    s.distinct_count(),
                    1 + nu(m - 1, n),
                    "M={m} n={n}"
                );
            }
        }
    }

    #[test]
    fn nu_counts_divisors_up_to_n() {
        assert_eq!(nu(1, 1), 1);
        assert_eq!(nu(2, 1), 1);
        assert_eq!(nu(2, 2), 2);
        assert_eq!(nu(4, 3), 2); // 1, 2
        assert_eq!(nu(4, 4), 3);
        assert_eq!(nu(6, 8), 4); // 1, 2, 3, 6
        assert_eq!(nu(6, 5), 3);
    }

    #[test]
    fn surjectivity_examples() {
        let yes = surjectivity_report(2, 7, 5).unwrap();
        assert!(yes.surjective && yes.by_order && yes.by_group_order);
        assert_eq!(yes.order_of_q, Some(4));

        assert!(!is_surjective(2, 5, 5).unwrap()); // M | q, n >= 2
        assert!(!is_surjective(2, 3, 2).unwrap()); // ord(3 mod 2) = 1 <= 2
        assert!(!is_surjective(3, 4, 3).unwrap()); // ord(4 mod 3) = 1 <= 3
        assert!(is_surjective(1, 3, 5).unwrap()); // gcd(5, |GL(1,3)| = 2) = 1
    }

    #[test]
    fn surjectivity_rank_one_characteristic_corner() {
        // GL(1,4) = C_3; squaring is onto even though 2 | q — the gcd
        // criterion sees it, the order form does not apply
        let report = surjectivity_report(1, 4, 2).unwrap();
        assert!(report.surjective);
        assert!(report.by_group_order);
        assert!(!report.by_order);
        assert_eq!(report.order_of_q, None);
    }

    #[test]
    fn surjectivity_routes_agree_off_the_corner() {
        for n in 1..=6u32 {
            for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
                for m in [2u64, 3, 5, 7, 11, 13] {
                    let r = surjectivity_report(n, q, m).unwrap();
                    if n >= 2 || r.gcd_m_q == 1 {
                        assert_eq!(r.by_order, r.by_group_order, "n={n} q={q} M={m}");
                    }
                    assert_eq!(r.surjective, r.by_group_order);
                }
            }
        }
    }

    #[test]
    fn abelian_ratios() {
        assert_eq!(abelian_power_ratio(&[6], 2), ratio(1, 2));
        assert_eq!(abelian_power_ratio(&[4, 6], 2), ratio(1, 4));
        assert_eq!(abelian_power_ratio(&[5], 2), ratio(1, 1));
        assert_eq!(abelian_power_ratio(&[], 7), ratio(1, 1));
        assert_eq!(abelian_power_ratio(&[12, 9, 10], 6), ratio(1, 36));
    }

    #[test]
    fn custom_table_goes_through_the_same_pipeline() {
        let doc = r#"{
            "name": "GL(2) copy",
            "rank": 2,
            "tori": [
                {"weyl_order": 2, "factors": [[-1, 0, 1]]},
                {"weyl_order": 2, "factors": [[-1, 1], [-1, 1]]}
            ]
        }"#;
        let custom = load_custom_tori(doc).unwrap();
        assert_eq!(limit_proportion(&custom, 2, 3).unwrap().value, ratio(3, 8));
        assert_eq!(value_at_residue(&custom, 2, 1), ratio(3, 8));
    }

    #[test]
    fn custom_factor_must_be_positive_at_q() {
        let doc = r#"{
            "name": "shifted",
            "rank": 1,
            "tori": [{"weyl_order": 1, "factors": [[-5, 1]]}]
        }"#;
        let custom = load_custom_tori(doc).unwrap();
        assert!(matches!(
            limit_proportion(&custom, 2, 3),
            Err(Error::NonPositiveFactor { .. })
        ));
        // the residue path has no positivity constraint
        assert!(limit_proportion_residue(&custom, 2, 1).is_ok());
    }

    #[test]
    fn validation_errors() {
        assert!(limit_proportion(&gl(2), 1, 3).is_err());
        assert!(limit_proportion(&gl(2), 2, 6).is_err()); // 6 = 2 * 3
        assert!(limit_proportion(&gl(2), 2, 1).is_err());
        assert!(limit_proportion_residue(&gl(2), 2, 2).is_err());
        assert!(subsequential_limits(&gl(2), 4).is_err()); // composite
        assert!(subsequential_limits(&sl(2), 3).is_err()); // unsupported family
        assert!(surjectivity_report(0, 3, 2).is_err());
        assert!(surjectivity_report(2, 3, 4).is_err());
        assert!(surjectivity_report(2, 12, 3).is_err());
    }

    #[test]
    fn describe_points() {
        assert_eq!(EvalPoint::PrimePower(9).describe(2), "q = 9");
        assert_eq!(EvalPoint::Residue(1).describe(3), "q = 1 (mod 3)");
    }
}
