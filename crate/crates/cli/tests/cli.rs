//! End-to-end tests of the binary: exit codes, output schemas, and the
//! analyze pipeline on temporary pencil files.

use std::io::Write;
use std::process::{Command, Output};

use symmetroid_cli::report::{AnalyzeReport, CheckStatus, VerifyReport};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symmetroid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

fn temp_pencil(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().expect("temp file");
    f.write_all(text.as_bytes()).expect("write");
    f
}

const HEALTHY_PENCIL: &str = "n=5\n\
    A0:\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n\
    A1:\n0 0 1 0\n0 0 0 0\n1 0 0 0\n0 0 0 0\n\
    A2:\n0 0 0 1\n0 0 0 0\n0 0 0 0\n1 0 0 0\n\
    A3:\n0 0 0 0\n0 0 1 0\n0 1 0 0\n0 0 0 0\n\
    A4:\n0 0 0 0\n0 0 0 1\n0 0 0 0\n0 1 0 0\n";

/// x5 never appears, so e5 spans a cone vertex.
const CONE_PENCIL: &str = "n=6\n\
    A0:\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n\
    A1:\n0 0 1 0\n0 0 0 0\n1 0 0 0\n0 0 0 0\n\
    A2:\n0 0 0 1\n0 0 0 0\n0 0 0 0\n1 0 0 0\n\
    A3:\n0 0 0 0\n0 0 1 0\n0 1 0 0\n0 0 0 0\n\
    A4:\n0 0 0 0\n0 0 0 1\n0 0 0 0\n0 1 0 0\n";

/// Web y0^2, y1^2, 2 y0 y2, 2 y1 y3: base locus is the line y0 = y1 = 0.
const CURVE_BASE_PENCIL: &str = "n=4\n\
    A0:\n1 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n\
    A1:\n0 0 0 0\n0 1 0 0\n0 0 0 0\n0 0 0 0\n\
    A2:\n0 0 1 0\n0 0 0 0\n1 0 0 0\n0 0 0 0\n\
    A3:\n0 0 0 0\n0 0 0 1\n0 0 0 0\n0 1 0 0\n";

#[test]
fn verify_pass_exits_zero_and_emits_the_json_schema() {
    let out = run(&["verify", "double-plane", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let report: VerifyReport = serde_json::from_str(&stdout(&out)).expect("schema");
    assert_eq!(report.id, "double-plane");
    assert_eq!(report.seed, 7);
    assert!(report.lambda.is_none());
    assert!(report.passed);
    assert!(!report.checks.is_empty());
    for check in &report.checks {
        assert_eq!(check.status, CheckStatus::Pass);
        assert!(!check.witness.is_empty());
    }
}

#[test]
fn verify_human_output_has_one_line_per_check_and_a_verdict() {
    let out = run(&["verify", "double-plane"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("PASS  nondegenerate"));
    assert!(text.contains("PASS  minors-in-ideal"));
    assert!(text.contains("verdict: all checks passed"));
}

#[test]
fn verify_only_subset_runs_just_those_checks() {
    let out = run(&["verify", "double-plane", "--only", "nondegenerate", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let report: VerifyReport = serde_json::from_str(&stdout(&out)).expect("schema");
    assert_eq!(report.checks.len(), 1);
    assert_eq!(report.checks[0].name, "nondegenerate");
}

#[test]
fn verify_lambda_family_reports_lambda_in_the_json() {
    let out = run(&["verify", "lambda-family", "--lambda", "2", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let report: VerifyReport = serde_json::from_str(&stdout(&out)).expect("schema");
    assert_eq!(report.lambda.as_deref(), Some("2"));
    assert!(report.passed);
}

#[test]
fn verify_negative_lambda_parses_with_a_leading_hyphen() {
    let out = run(&["verify", "lambda-family", "--lambda", "-1", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let report: VerifyReport = serde_json::from_str(&stdout(&out)).expect("schema");
    assert_eq!(report.lambda.as_deref(), Some("-1"));
    assert!(report.checks.iter().any(|c| c.name == "infeasibility-certificate"));
}

#[test]
fn usage_errors_exit_two() {
    // Unknown example id.
    let out = run(&["verify", "no-such-example"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("no-such-example"));
    // Unknown check name.
    let out = run(&["verify", "double-plane", "--only", "no-such-check"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("no-such-check"));
    // A real check that this example does not declare.
    let out = run(&["verify", "double-plane", "--only", "base-locus"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("does not apply"));
    // Lambda on an example that does not take it.
    let out = run(&["verify", "double-plane", "--lambda", "2"]);
    assert_eq!(exit_code(&out), 2);
    // Lambda family without lambda.
    let out = run(&["verify", "lambda-family"]);
    assert_eq!(exit_code(&out), 2);
    // Malformed and degenerate lambda values.
    for bad in ["zero", "1/0", "0"] {
        let out = run(&["verify", "lambda-family", "--lambda", bad]);
        assert_eq!(exit_code(&out), 2, "lambda {bad}");
    }
}

#[test]
fn analyze_healthy_pencil_reports_all_stages() {
    let f = temp_pencil(HEALTHY_PENCIL);
    let out = run(&["analyze", f.path().to_str().unwrap(), "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let report: AnalyzeReport = serde_json::from_str(&stdout(&out)).expect("schema");
    assert_eq!(report.num_vars, 5);
    let stages: Vec<&str> = report.findings.iter().map(|f| f.stage.as_str()).collect();
    assert_eq!(
        stages,
        ["determinant", "cone-test", "rank-profile", "base-locus", "spectrahedron"]
    );
    let outcomes: Vec<&str> = report.findings.iter().map(|f| f.outcome.as_str()).collect();
    assert_eq!(outcomes[0], "quartic");
    assert_eq!(outcomes[1], "not-a-cone");
    assert_eq!(outcomes[4], "definite-point");
}

#[test]
fn analyze_detects_a_cone() {
    let f = temp_pencil(CONE_PENCIL);
    let out = run(&["analyze", f.path().to_str().unwrap(), "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let report: AnalyzeReport = serde_json::from_str(&stdout(&out)).expect("schema");
    let cone = report.findings.iter().find(|f| f.stage == "cone-test").expect("stage");
    assert_eq!(cone.outcome, "cone");
}

#[test]
fn analyze_flags_a_positive_dimensional_base_locus() {
    let f = temp_pencil(CURVE_BASE_PENCIL);
    let out = run(&["analyze", f.path().to_str().unwrap(), "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let report: AnalyzeReport = serde_json::from_str(&stdout(&out)).expect("schema");
    let base = report.findings.iter().find(|f| f.stage == "base-locus").expect("stage");
    assert_eq!(base.outcome, "positive-dimensional");
}

#[test]
fn analyze_file_problems_exit_two() {
    let out = run(&["analyze", "/no/such/file"]);
    assert_eq!(exit_code(&out), 2);
    let f = temp_pencil("not a pencil at all\n");
    let out = run(&["analyze", f.path().to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("cannot parse"));
}

#[test]
fn list_examples_names_the_whole_catalogue() {
    let out = run(&["list-examples"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    for id in [
        "double-plane",
        "max-smooth-1",
        "max-smooth-2",
        "double-p3",
        "two-p3s",
        "lambda-1",
        "lambda-neg-1",
        "lambda-family",
    ] {
        assert!(text.contains(id), "{id} listed");
    }
    assert!(text.contains("takes --lambda"));

    let out = run(&["list-examples", "--format", "json"]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&stdout(&out)).expect("schema");
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().any(|r| r["id"] == "lambda-family" && r["takes_lambda"] == true));
}
