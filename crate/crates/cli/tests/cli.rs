//! End-to-end tests running the compiled binary against files and
//! checking the emitted JSON, stderr diagnostics, and exit codes.

use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::NamedTempFile;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gamma3"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn matrix_file(contents: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().expect("temp file");
    f.write_all(contents.as_bytes()).expect("write");
    f
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "expected success, got {:?}; stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

/// Assert the keys appear in the raw output in the given order; parsed
/// Values sort keys alphabetically, so order must be checked on the text.
fn assert_key_order(out: &Output, keys: &[&str]) {
    let text = String::from_utf8_lossy(&out.stdout);
    let positions: Vec<usize> = keys
        .iter()
        .map(|k| text.find(&format!("\"{k}\"")).unwrap_or_else(|| panic!("missing key {k}")))
        .collect();
    assert!(
        positions.windows(2).all(|w| w[0] < w[1]),
        "keys out of order: {keys:?} at {positions:?}"
    );
}

const IDENTITY: &str = r#"[["1","0","0"],["0","1","0"],["0","0","1"]]"#;
const GOLDEN: &str = r#"[["4","-3","-12"],["-3","4","15"],["-6","3","13"]]"#;

#[test]
fn invariants_of_identity() {
    let f = matrix_file(IDENTITY);
    let out = run(&["invariants", f.path().to_str().unwrap()]);
    let json = stdout_json(&out);
    assert_eq!(
        json["invariants"],
        serde_json::json!(["0+0*w", "0+0*w", "1+0*w", "0+0*w", "0+0*w", "1+0*w"])
    );
    assert_eq!(json["satisfied"], serde_json::json!(["I1", "I2", "I3", "I4"]));
}

#[test]
fn invariants_of_rational_sample() {
    let f = matrix_file(GOLDEN);
    let out = run(&["invariants", f.path().to_str().unwrap()]);
    let json = stdout_json(&out);
    assert_eq!(
        json["invariants"],
        serde_json::json!(["-6+0*w", "3+0*w", "13+0*w", "15+0*w", "51+0*w", "7+0*w"])
    );
}

#[test]
fn invariants_rejects_non_member() {
    let f = matrix_file(r#"[["1","1","0"],["0","1","0"],["0","0","1"]]"#);
    let out = run(&["invariants", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("(1, 2)"), "stderr names the entry: {stderr}");
}

#[test]
fn decompose_left_golden() {
    let f = matrix_file(GOLDEN);
    let out = run(&["decompose", "--side", "left", f.path().to_str().unwrap()]);
    let json = stdout_json(&out);
    assert_eq!(json["cell"], "Delta11");
    assert_eq!(json["recomposes"], true);
    assert_key_order(&out, &["cell", "C", "u", "d", "y3", "y2", "y1", "recomposes"]);
}

#[test]
fn decompose_right_golden() {
    let f = matrix_file(GOLDEN);
    let out = run(&["decompose", "--side", "right", f.path().to_str().unwrap()]);
    let json = stdout_json(&out);
    assert_eq!(json["cell"], "Delta11");
    assert_eq!(json["recomposes"], true);
    assert_key_order(&out, &["cell", "y1", "y2", "y3", "d", "u", "C", "recomposes"]);
}

#[test]
fn decompose_identity_is_degenerate_cell() {
    let f = matrix_file(IDENTITY);
    let out = run(&["decompose", f.path().to_str().unwrap()]);
    let json = stdout_json(&out);
    assert_eq!(json["cell"], "Delta2");
    assert_eq!(json["recomposes"], true);
}

#[test]
fn decompose_rejects_non_unimodular() {
    let f = matrix_file(r#"[["2","0","0"],["0","1","0"],["0","0","1"]]"#);
    let out = run(&["decompose", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn unreadable_matrix_is_a_parse_error() {
    let f = matrix_file("not json at all");
    let out = run(&["invariants", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn represent_identity_tuple() {
    let out = run(&["represent", "--tuple", "0", "0", "1", "0", "0", "1"]);
    let json = stdout_json(&out);
    assert_eq!(json["case"], "Case5");
    assert_eq!(
        json["X"],
        serde_json::json!([
            ["1+0*w", "0+0*w", "0+0*w"],
            ["0+0*w", "1+0*w", "0+0*w"],
            ["0+0*w", "0+0*w", "1+0*w"]
        ])
    );
}

#[test]
fn represent_omega_tuple() {
    let out = run(&[
        "represent", "--tuple", "-3+6*w", "-3", "-2-3*w", "-6+3*w", "3-6*w", "4+3*w",
    ]);
    let json = stdout_json(&out);
    assert_eq!(json["case"], "Case1");
    assert_key_order(&out, &["X", "case", "decomposition"]);
    assert_eq!(json["decomposition"]["cell"], "Delta11");
}

#[test]
fn represent_rejects_invalid_tuple() {
    let out = run(&["represent", "--tuple", "1", "0", "1", "0", "0", "1"]);
    assert_eq!(out.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("I1"), "stderr names a violated condition: {stderr}");
}

#[test]
fn verify_tuple_reports_conditions() {
    let out = run(&["verify", "--tuple", "3", "3", "1", "3", "3", "1"]);
    let json = stdout_json(&out);
    assert_eq!(json["kind"], "tuple");
    assert_eq!(json["conditions"]["I1"], true);
    assert_eq!(json["conditions"]["I2"], true);
    assert_eq!(json["conditions"]["I3"], true);
    assert_eq!(json["conditions"]["I4"], false);
    assert_eq!(json["valid"], false);
    assert_eq!(json["case"], Value::Null);
}

#[test]
fn verify_matrix_reports_memberships() {
    let f = matrix_file(IDENTITY);
    let out = run(&["verify", f.path().to_str().unwrap()]);
    let json = stdout_json(&out);
    assert_eq!(json["kind"], "matrix");
    assert_eq!(json["det_is_one"], true);
    assert_eq!(json["in_gamma3"], true);
    assert_eq!(json["in_gamma_inf3"], true);
    assert_eq!(json["cell"], "Delta2");
}

#[test]
fn roundtrip_small_run_passes_and_is_deterministic() {
    let first = run(&["roundtrip", "--samples", "5", "--seed", "7"]);
    assert_eq!(first.status.code(), Some(0));
    let second = run(&["roundtrip", "--samples", "5", "--seed", "7"]);
    assert_eq!(first.stdout, second.stdout, "same seed must reproduce the report");
    let json = stdout_json(&first);
    assert_eq!(json["all_passed"], true);
    assert_eq!(json["counterexample"], Value::Null);
    assert_eq!(json["properties"]["decompose_left_roundtrip"]["pass"], 5);
}

#[test]
fn roundtrip_rejects_zero_samples() {
    let out = run(&["roundtrip", "--samples", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn roundtrip_handles_empty_words() {
    let out = run(&["roundtrip", "--samples", "1", "--length", "0"]);
    let json = stdout_json(&out);
    assert_eq!(json["all_passed"], true);
}
