//! End-to-end tests of the `powmap` binary: output formats, JSON schema
//! round-trips, the exit-code contract, and file output.

use std::io::Write;
use std::process::{Command, Output};

use powmap::cli::render::render_json;
use powmap::cli::schema::{CensusOut, LimitOut, LimitsAllOut, SurjectiveOut, VerifyOut};

fn powmap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_powmap"))
        .args(args)
        .output()
        .expect("failed to launch the powmap binary")
}

fn stdout_of(args: &[&str]) -> String {
    let out = powmap(args);
    assert!(
        out.status.success(),
        "`powmap {}` failed: {}",
        args.join(" "),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

#[test]
fn limit_table_carries_the_value_and_breakdown() {
    let table = stdout_of(&["limit", "--family", "gl", "--n", "2", "--M", "2", "--q", "3"]);
    assert!(table.contains("GL(2), M = 2, q = 3"));
    assert!(table.contains("limit |G^M| / |G| = 3/8"));
    assert!(table.contains("C(q^2 - 1)"));
    assert!(table.contains("1/4") && table.contains("1/8"));
}

#[test]
fn limit_decimals_are_opt_in() {
    let plain = stdout_of(&["limit", "--family", "gl", "--n", "2", "--M", "2", "--q", "3"]);
    assert!(!plain.contains("decimal"));
    let with = stdout_of(&[
        "limit", "--family", "gl", "--n", "2", "--M", "2", "--q", "3", "--decimals", "4",
    ]);
    assert!(with.contains("decimal (rounded): 0.3750"));
}

#[test]
fn limit_json_round_trips_byte_identically() {
    let raw = stdout_of(&[
        "limit", "--family", "gl", "--n", "3", "--M", "2", "--q", "5", "--format", "json",
    ]);
    let parsed: LimitOut = serde_json::from_str(&raw).expect("typed parse");
    assert_eq!(parsed.value.num, "5");
    assert_eq!(parsed.value.den, "16");
    assert_eq!(parsed.q, Some(5));
    assert_eq!(parsed.residue, None);
    assert_eq!(render_json(&parsed), raw);
}

#[test]
fn limit_formats_agree_on_the_numbers() {
    let table = stdout_of(&["limit", "--family", "gl", "--n", "2", "--M", "2", "--q", "3"]);
    let json = stdout_of(&[
        "limit", "--family", "gl", "--n", "2", "--M", "2", "--q", "3", "--format", "json",
    ]);
    let csv = stdout_of(&[
        "limit", "--family", "gl", "--n", "2", "--M", "2", "--q", "3", "--format", "csv",
    ]);
    assert!(table.contains("3/8"));
    let parsed: LimitOut = serde_json::from_str(&json).unwrap();
    assert_eq!((parsed.value.num.as_str(), parsed.value.den.as_str()), ("3", "8"));
    let mut lines = csv.lines();
    assert_eq!(
        lines.next(),
        Some("torus,structure,weyl_order,gcds,term_num,term_den")
    );
    let total = csv.lines().last().unwrap();
    assert!(total.starts_with("(total)"));
    assert!(total.ends_with(",3,8"));
}

#[test]
fn limits_all_lists_every_condition() {
    let table = stdout_of(&["limits-all", "--family", "gl", "--n", "2", "--M", "3"]);
    assert!(table.contains("3 | q"));
    assert!(table.contains("ord(q mod 3) = 1"));
    assert!(table.contains("ord(q mod 3) = 2"));
    assert!(table.contains("2/9") && table.contains("2/3"));
    assert!(table.contains("distinct values: 3"));

    let raw = stdout_of(&[
        "limits-all", "--family", "u", "--n", "3", "--M", "3", "--format", "json",
    ]);
    let parsed: LimitsAllOut = serde_json::from_str(&raw).unwrap();
    assert_eq!(parsed.entries.len(), 3);
    assert_eq!(parsed.distinct_count, 3);
    assert!(parsed.collisions.is_empty());
    assert_eq!(render_json(&parsed), raw);

    let csv = stdout_of(&[
        "limits-all", "--family", "gl", "--n", "2", "--M", "3", "--format", "csv",
    ]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("condition,order,value_num,value_den"));
    assert_eq!(lines.next(), Some("3 | q,,1,1"));
}

#[test]
fn census_reports_the_exact_counts() {
    let raw = stdout_of(&[
        "census", "--family", "gl", "--n", "2", "--M", "2", "--q", "3", "--format", "json",
    ]);
    let parsed: CensusOut = serde_json::from_str(&raw).unwrap();
    assert_eq!(parsed.group_order, "48");
    assert_eq!(parsed.power_image, "16");
    assert_eq!(parsed.power_rs, "6");
    assert_eq!(
        (parsed.limit_value.num.as_str(), parsed.limit_value.den.as_str()),
        ("3", "8")
    );
    assert_eq!(
        (parsed.deviation_image.num.as_str(), parsed.deviation_image.den.as_str()),
        ("-1", "24")
    );
    assert_eq!(render_json(&parsed), raw);

    let csv = stdout_of(&[
        "census", "--family", "gl", "--n", "2", "--M", "2", "--q", "3", "--format", "csv",
    ]);
    let mut lines = csv.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("family,n,q,m,group_order,power_image"));
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(row[4], "48"); // group_order
    assert_eq!(row[5], "16"); // power_image
    assert_eq!(row[12], "1"); // prop_image_num
    assert_eq!(row[13], "3"); // prop_image_den

    let table = stdout_of(&["census", "--family", "gl", "--n", "2", "--M", "2", "--q", "3"]);
    assert!(table.contains("group order: 48"));
    assert!(table.contains("regular semisimple"));
}

#[test]
fn abelian_shows_formula_and_enumeration() {
    let table = stdout_of(&["abelian", "--factors", "4,6", "--M", "2"]);
    assert!(table.contains("C_4 x C_6"));
    assert!(table.contains("1/4"));
    assert!(table.contains("6 of 24"));
    assert!(table.contains("agrees"));
}

#[test]
fn surjective_prints_both_criteria() {
    let raw = stdout_of(&[
        "surjective", "--n", "2", "--q", "2", "--M", "5", "--format", "json",
    ]);
    let parsed: SurjectiveOut = serde_json::from_str(&raw).unwrap();
    assert!(parsed.surjective);
    assert_eq!(parsed.order_of_q_mod_m, Some(4));
    assert_eq!(render_json(&parsed), raw);

    let table = stdout_of(&["surjective", "--n", "2", "--q", "3", "--M", "2"]);
    assert!(table.contains("surjective: false"));
    assert!(table.contains("gcd(M, |GL(n,q)|)"));
}

#[test]
fn verify_gate_exit_codes() {
    let pass = powmap(&["verify", "--family", "gl", "--n", "2", "--M", "2", "--q", "7"]);
    assert_eq!(pass.status.code(), Some(0));
    let text = String::from_utf8(pass.stdout).unwrap();
    assert!(text.contains("PASS"));

    let fail = powmap(&[
        "verify", "--family", "gl", "--n", "2", "--M", "2", "--q", "7", "--bound", "0",
    ]);
    assert_eq!(fail.status.code(), Some(1));
    let text = String::from_utf8(fail.stdout).unwrap();
    assert!(text.contains("FAIL"), "gate failure still prints the report");

    let raw = stdout_of(&[
        "verify", "--family", "gl", "--n", "2", "--M", "2", "--q", "7", "--format", "json",
    ]);
    let parsed: VerifyOut = serde_json::from_str(&raw).unwrap();
    assert!(parsed.pass);
    assert_eq!(parsed.rows.len(), 4);
    assert_eq!(render_json(&parsed), raw);
}

#[test]
fn validation_errors_exit_2() {
    // q = 6 is not a prime power
    let out = powmap(&["limit", "--family", "gl", "--n", "2", "--M", "2", "--q", "6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a prime power"));

    // composite M for the subsequential classification
    let out = powmap(&["limits-all", "--family", "gl", "--n", "2", "--M", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("prime"));

    // clap-level: missing --n for a built-in family
    let out = powmap(&["limit", "--family", "gl", "--M", "2", "--q", "3"]);
    assert_eq!(out.status.code(), Some(2));

    // M = 1 is rejected for the census
    let out = powmap(&["census", "--family", "gl", "--n", "2", "--M", "1", "--q", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn resource_caps_exit_3_and_name_the_predicted_order() {
    let out = powmap(&["census", "--family", "gl", "--n", "4", "--M", "2", "--q", "5"]);
    assert_eq!(out.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(stderr.contains("116064000000"), "predicted order printed: {stderr}");
    assert!(stderr.contains("exceeds cap"));

    let out = powmap(&[
        "census", "--family", "gl", "--n", "3", "--M", "2", "--q", "3", "--max-order", "100",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(stderr.contains("11232") && stderr.contains("100"));
}

#[test]
fn custom_torus_file_drives_every_command_that_takes_a_family() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    // the GL(2) table under another name
    write!(
        file,
        r#"{{"name": "rank-2 demo", "rank": 2, "tori": [
            {{"weyl_order": 2, "factors": [[-1, 0, 1]]}},
            {{"weyl_order": 2, "factors": [[-1, 1], [-1, 1]]}}
        ]}}"#
    )
    .unwrap();
    let path = file.path().to_str().unwrap();

    let table = stdout_of(&["limit", "--family", "custom", "--tori", path, "--M", "2", "--q", "3"]);
    assert!(table.contains("rank-2 demo, M = 2, q = 3"));
    assert!(table.contains("3/8"));

    // enumeration is impossible without a matrix model
    let out = powmap(&["census", "--family", "custom", "--tori", path, "--M", "2", "--q", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("matrix model"));

    // a rejected document reports why
    let mut bad = tempfile::NamedTempFile::new().unwrap();
    write!(bad, r#"{{"name": "x", "rank": 1, "tori": []}}"#).unwrap();
    let out = powmap(&[
        "limit", "--family", "custom", "--tori", bad.path().to_str().unwrap(), "--M", "2",
        "--q", "3",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_flag_writes_the_file_instead_of_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("limit.csv");
    let out = powmap(&[
        "limit", "--family", "gl", "--n", "2", "--M", "2", "--q", "3", "--format", "csv",
        "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty(), "nothing on stdout when --out is given");
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("torus,structure"));
    assert!(written.trim_end().ends_with(",3,8"));
}
