//! The `powmap` command-line surface.
//!
//! Six batch subcommands over the library: `limit` (one exact limiting
//! proportion with its per-torus breakdown), `limits-all` (every
//! subsequential limit for a prime M), `census` (brute-force counts with
//! the formula comparison), `abelian` (cyclic-product power ratio),
//! `surjective` (power-map surjectivity on GL(n,q)), and `verify` (census
//! vs. limit as a CI gate). Output is an aligned table, JSON, or CSV —
//! identical numeric content in all three.
//!
//! Exit codes are a stable contract: 0 success, 1 a failed `verify` gate,
//! 2 validation errors, 3 a refused resource cap.

pub mod render;
pub mod schema;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use crate::asymptotics::{
    abelian_power_ratio, limit_proportion, limit_proportion_residue, subsequential_limits,
    surjectivity_report,
};
use crate::oracle::{abelian_census_counts, census, CensusOptions, DEFAULT_GROUP_CAP};
use crate::rational::{parse_decimal, ratio};
use crate::tori::{load_custom_tori, GroupFamily};
use crate::{Error, Result};
use schema::{AbelianOut, CensusOut, LimitOut, LimitsAllOut, SurjectiveOut, VerifyOut};

/// Exact limiting proportions of M-th powers in finite reductive groups,
/// with a brute-force census oracle for small parameters.
#[derive(Debug, Parser)]
#[command(name = "powmap", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact limiting proportion at a concrete q or along a residue class.
    Limit(LimitArgs),
    /// All subsequential limits as q grows, for a prime exponent M.
    LimitsAll(LimitsAllArgs),
    /// Enumerate a small group, count M-th powers, compare with the limit.
    Census(CensusArgs),
    /// Exact proportion of M-th powers in a product of cyclic groups.
    Abelian(AbelianArgs),
    /// Decide whether x -> x^M is onto GL(n,q), for prime M.
    Surjective(SurjectiveArgs),
    /// Gate: census proportions must lie within bound/q of the limit.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyKind {
    Gl,
    Sl,
    U,
    Custom,
}

#[derive(Debug, Args)]
struct FamilyArgs {
    /// Group family.
    #[arg(long, value_enum)]
    family: FamilyKind,
    /// Size parameter n of the built-in family.
    #[arg(
        long,
        conflicts_with = "tori",
        required_if_eq_any([("family", "gl"), ("family", "sl"), ("family", "u")])
    )]
    n: Option<u32>,
    /// JSON torus table for --family custom.
    #[arg(long, value_name = "PATH", required_if_eq("family", "custom"))]
    tori: Option<PathBuf>,
}

impl FamilyArgs {
    fn resolve(&self) -> Result<GroupFamily> {
        match self.family {
            FamilyKind::Gl => GroupFamily::gl(self.expect_n()?),
            FamilyKind::Sl => GroupFamily::sl(self.expect_n()?),
            FamilyKind::U => GroupFamily::u(self.expect_n()?),
            FamilyKind::Custom => {
                let path = self
                    .tori
                    .as_ref()
                    .ok_or_else(|| Error::Invalid("--family custom requires --tori".into()))?;
                let text = std::fs::read_to_string(path)?;
                load_custom_tori(&text)
            }
        }
    }

    fn expect_n(&self) -> Result<u32> {
        self.n
            .ok_or_else(|| Error::Invalid("--n is required for built-in families".into()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Write the output to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

impl OutputArgs {
    fn emit(&self, text: &str) -> Result<()> {
        match &self.out {
            Some(path) => std::fs::write(path, text)?,
            None => print!("{text}"),
        }
        Ok(())
    }
}

#[derive(Debug, Args)]
#[command(group = ArgGroup::new("point").required(true).multiple(false))]
struct LimitArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Power-map exponent (at least 2; any integer, prime or not).
    #[arg(long = "M")]
    m: u64,
    /// Evaluate the gcds at this concrete prime power q.
    #[arg(long, group = "point")]
    q: Option<u64>,
    /// Evaluate along the residue class q ≡ RESIDUE (mod M).
    #[arg(long, group = "point")]
    residue: Option<u64>,
    /// Also print the value rounded to this many decimal places.
    #[arg(long, value_name = "K")]
    decimals: Option<u32>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct LimitsAllArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Prime power-map exponent.
    #[arg(long = "M")]
    m: u64,
    /// Also print each value rounded to this many decimal places.
    #[arg(long, value_name = "K")]
    decimals: Option<u32>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct CensusArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Power-map exponent (at least 2).
    #[arg(long = "M")]
    m: u64,
    /// Field size q (prime power).
    #[arg(long)]
    q: u64,
    /// Worker threads; 0 uses every available core.
    #[arg(long, default_value_t = 0)]
    threads: usize,
    /// Refuse to enumerate groups with more elements than this.
    #[arg(long, default_value_t = DEFAULT_GROUP_CAP)]
    max_order: u64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct AbelianArgs {
    /// Cyclic factor orders of the group C_{d1} x C_{d2} x ...
    #[arg(long, value_delimiter = ',', value_name = "D1,D2,...")]
    factors: Vec<u64>,
    /// Power-map exponent (at least 2).
    #[arg(long = "M")]
    m: u64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct SurjectiveArgs {
    /// Matrix size of GL(n,q).
    #[arg(long)]
    n: u32,
    /// Field size q (prime power).
    #[arg(long)]
    q: u64,
    /// Prime power-map exponent.
    #[arg(long = "M")]
    m: u64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Power-map exponent (at least 2).
    #[arg(long = "M")]
    m: u64,
    /// Field size q (prime power).
    #[arg(long)]
    q: u64,
    /// Pass when every census proportion is within BOUND/q of the limit.
    #[arg(long, default_value = "2", value_name = "BOUND")]
    bound: String,
    /// Worker threads; 0 uses every available core.
    #[arg(long, default_value_t = 0)]
    threads: usize,
    /// Refuse to enumerate groups with more elements than this.
    #[arg(long, default_value_t = DEFAULT_GROUP_CAP)]
    max_order: u64,
    #[command(flatten)]
    output: OutputArgs,
}

/// Parse the process arguments, run the requested command, and map errors
/// to the exit-code contract (2 validation, 3 resource cap).
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            if err.is_cap() {
                ExitCode::from(3)
            } else {
                ExitCode::from(2)
            }
        }
    }
}

fn execute(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Limit(args) => cmd_limit(args),
        Command::LimitsAll(args) => cmd_limits_all(args),
        Command::Census(args) => cmd_census(args),
        Command::Abelian(args) => cmd_abelian(args),
        Command::Surjective(args) => cmd_surjective(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn cmd_limit(args: LimitArgs) -> Result<ExitCode> {
    let family = args.family.resolve()?;
    let report = match (args.q, args.residue) {
        (Some(q), None) => limit_proportion(&family, args.m, q)?,
        (None, Some(r)) => limit_proportion_residue(&family, args.m, r)?,
        _ => unreachable!("clap enforces exactly one of --q / --residue"),
    };
    let out = LimitOut::new(&report, args.decimals);
    let text = match args.output.format {
        Format::Table => render::table_limit(&out),
        Format::Json => render::render_json(&out),
        Format::Csv => render::csv_limit(&out),
    };
    args.output.emit(&text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_limits_all(args: LimitsAllArgs) -> Result<ExitCode> {
    let family = args.family.resolve()?;
    let limits = subsequential_limits(&family, args.m)?;
    let out = LimitsAllOut::new(&limits, args.decimals);
    let text = match args.output.format {
        Format::Table => render::table_limits_all(&out),
        Format::Json => render::render_json(&out),
        Format::Csv => render::csv_limits_all(&out),
    };
    args.output.emit(&text)?;
    Ok(ExitCode::SUCCESS)
}

fn require_m_at_least_2(m: u64) -> Result<()> {
    if m < 2 {
        return Err(Error::Invalid(format!(
            "M = {m}; the exponent must be at least 2"
        )));
    }
    Ok(())
}

fn cmd_census(args: CensusArgs) -> Result<ExitCode> {
    require_m_at_least_2(args.m)?;
    let family = args.family.resolve()?;
    let opts = CensusOptions {
        threads: args.threads,
        max_order: args.max_order,
    };
    let counts = census(&family, args.q, args.m, &opts)?;
    let limit = limit_proportion(&family, args.m, args.q)?.value;
    let out = CensusOut::new(&counts, &limit);
    let text = match args.output.format {
        Format::Table => render::table_census(&out),
        Format::Json => render::render_json(&out),
        Format::Csv => render::csv_census(&out),
    };
    args.output.emit(&text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_abelian(args: AbelianArgs) -> Result<ExitCode> {
    require_m_at_least_2(args.m)?;
    if args.factors.contains(&0) {
        return Err(Error::Invalid("cyclic factors must be positive".into()));
    }
    let formula = abelian_power_ratio(&args.factors, args.m);
    // the formula is cheap at any size; the enumeration check is best-effort
    let census = match abelian_census_counts(&args.factors, args.m) {
        Ok(pair) => Some(pair),
        Err(Error::CapExceeded { .. }) => None,
        Err(other) => return Err(other),
    };
    let out = AbelianOut::new(&args.factors, args.m, &formula, census);
    let text = match args.output.format {
        Format::Table => render::table_abelian(&out),
        Format::Json => render::render_json(&out),
        Format::Csv => render::csv_abelian(&out),
    };
    args.output.emit(&text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_surjective(args: SurjectiveArgs) -> Result<ExitCode> {
    let report = surjectivity_report(args.n, args.q, args.m)?;
    let out = SurjectiveOut::new(&report);
    let text = match args.output.format {
        Format::Table => render::table_surjective(&out),
        Format::Json => render::render_json(&out),
        Format::Csv => render::csv_surjective(&out),
    };
    args.output.emit(&text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    require_m_at_least_2(args.m)?;
    let bound = parse_decimal(&args.bound)
        .ok_or_else(|| Error::Invalid(format!("--bound {:?} is not a decimal number", args.bound)))?;
    if bound < ratio(0, 1) {
        return Err(Error::Invalid("--bound must be non-negative".into()));
    }
    let family = args.family.resolve()?;
    let counts = census(
        &family,
        args.q,
        args.m,
        &CensusOptions {
            threads: args.threads,
            max_order: args.max_order,
        },
    )?;
    let limit = limit_proportion(&family, args.m, args.q)?.value;
    let tolerance = bound.clone() * ratio(1, args.q);
    let out = VerifyOut::new(&counts, &limit, &bound, &tolerance);
    let text = match args.output.format {
        Format::Table => render::table_verify(&out),
        Format::Json => render::render_json(&out),
        Format::Csv => render::csv_verify(&out),
    };
    args.output.emit(&text)?;
    Ok(if out.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn clap_configuration_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn limit_requires_exactly_one_evaluation_point() {
        let base = ["powmap", "limit", "--family", "gl", "--n", "2", "--M", "2"];
        assert!(Cli::try_parse_from(base).is_err());
        let with_q: Vec<&str> = base.iter().chain(&["--q", "3"]).copied().collect();
        assert!(Cli::try_parse_from(&with_q).is_ok());
        let with_both: Vec<&str> = with_q.iter().chain(&["--residue", "1"]).copied().collect();
        assert!(Cli::try_parse_from(&with_both).is_err());
    }

    #[test]
    fn built_in_families_require_n_and_custom_requires_tori() {
        assert!(Cli::try_parse_from(["powmap", "limit", "--family", "gl", "--M", "2", "--q", "3"])
            .is_err());
        assert!(Cli::try_parse_from([
            "powmap", "limit", "--family", "custom", "--M", "2", "--q", "3"
        ])
        .is_err());
        assert!(Cli::try_parse_from([
            "powmap", "limit", "--family", "custom", "--tori", "t.json", "--M", "2", "--q", "3"
        ])
        .is_ok());
        // --n makes no sense together with a torus file
        assert!(Cli::try_parse_from([
            "powmap", "limit", "--family", "custom", "--tori", "t.json", "--n", "2", "--M", "2",
            "--q", "3"
        ])
        .is_err());
    }

    #[test]
    fn census_defaults() {
        let cli = Cli::try_parse_from([
            "powmap", "census", "--family", "gl", "--n", "2", "--M", "2", "--q", "3",
        ])
        .unwrap();
        match cli.command {
            Command::Census(args) => {
                assert_eq!(args.threads, 0);
                assert_eq!(args.max_order, DEFAULT_GROUP_CAP);
                assert_eq!(args.output.format, Format::Table);
            }
            other => panic!("parsed into {other:?}"),
        }
    }

    #[test]
    fn factors_parse_as_a_comma_list() {
        let cli =
            Cli::try_parse_from(["powmap", "abelian", "--factors", "4,6", "--M", "2"]).unwrap();
        match cli.command {
            Command::Abelian(args) => assert_eq!(args.factors, vec![4, 6]),
            other => panic!("parsed into {other:?}"),
        }
    }

    #[test]
    fn verify_gate_fails_with_zero_bound() {
        let cli = Cli::try_parse_from([
            "powmap", "verify", "--family", "gl", "--n", "2", "--M", "2", "--q", "3", "--bound",
            "0", "--out", "/dev/null",
        ])
        .unwrap();
        let code = execute(cli).unwrap();
        assert_eq!(format!("{code:?}"), format!("{:?}", ExitCode::from(1)));

        let cli = Cli::try_parse_from([
            "powmap", "verify", "--family", "gl", "--n", "2", "--M", "2", "--q", "3", "--out",
            "/dev/null",
        ])
        .unwrap();
        let code = execute(cli).unwrap();
        assert_eq!(format!("{code:?}"), format!("{:?}", ExitCode::SUCCESS));
    }
}
