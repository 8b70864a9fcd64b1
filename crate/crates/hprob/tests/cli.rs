//! CLI error paths: every failure exits nonzero with a category tag on
//! stderr, and --json output is well-formed.

use std::io::Write;
use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_hprob"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        output.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&output.stdout).into_owned(),
        String::from_utf8_lossy(&output.stderr).into_owned(),
    )
}

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn temp_space(contents: &str) -> tempfile::NamedTempFile {
    let mut file = tempfile::NamedTempFile::new().expect("temp file");
    file.write_all(contents.as_bytes()).expect("write");
    file
}

#[test]
fn missing_file_is_a_parse_error() {
    let (code, _, stderr) = run(&["validate", "--space", "/no/such/file.json"]);
    assert_eq!(code, 2);
    assert!(stderr.starts_with("error[parse-error]:"), "{stderr}");
}

#[test]
fn malformed_json_is_a_parse_error() {
    let file = temp_space("{\"regime\": \"unit\"");
    let (code, _, stderr) = run(&["validate", "--space", file.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.starts_with("error[parse-error]:"), "{stderr}");
}

#[test]
fn zero_denominator_is_a_parse_error() {
    let file = temp_space(
        r#"{"regime": "unit", "atoms": [{"id": "1", "nu1": "1/0", "nu2": "1"}], "events": {}}"#,
    );
    let (code, _, stderr) = run(&["validate", "--space", file.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("denominator is zero"), "{stderr}");
}

#[test]
fn mass_mismatch_is_a_validation_error() {
    let file = temp_space(
        r#"{"regime": "e", "atoms": [{"id": "1", "nu1": "1/2", "nu2": "1/4"}], "events": {}}"#,
    );
    let (code, _, stderr) = run(&["validate", "--space", file.path().to_str().unwrap()]);
    assert_eq!(code, 3);
    assert!(stderr.starts_with("error[validation-error]:"), "{stderr}");
    assert!(stderr.contains("1/2*e + 1/4*e+"), "{stderr}");
}

#[test]
fn negative_weight_is_a_validation_error() {
    let file = temp_space(
        r#"{"regime": "unit", "atoms": [{"id": "1", "nu1": "3/2", "nu2": "1"}, {"id": "2", "nu1": "-1/2", "nu2": "0"}], "events": {}}"#,
    );
    let (code, _, stderr) = run(&["validate", "--space", file.path().to_str().unwrap()]);
    assert_eq!(code, 3);
    assert!(stderr.contains("atom \"2\""), "{stderr}");
}

#[test]
fn unknown_atom_in_event_registry_is_a_validation_error() {
    let file = temp_space(
        r#"{"regime": "unit", "atoms": [{"id": "1", "nu1": "1", "nu2": "1"}], "events": {"A": ["9"]}}"#,
    );
    let (code, _, stderr) = run(&["validate", "--space", file.path().to_str().unwrap()]);
    assert_eq!(code, 3);
    assert!(stderr.contains("unknown atom"), "{stderr}");
}

#[test]
fn unknown_event_is_a_query_error() {
    let (code, _, stderr) = run(&["prob", "--space", &fixture("uniform4.json"), "--event", "nope"]);
    assert_eq!(code, 4);
    assert!(stderr.starts_with("error[query-error]:"), "{stderr}");
}

#[test]
fn overlapping_parts_are_a_query_error() {
    let (code, _, stderr) = run(&[
        "total",
        "--space",
        &fixture("uniform4.json"),
        "--event",
        "A",
        "--part",
        "A",
        "--part",
        "B",
    ]);
    assert_eq!(code, 4);
    assert!(stderr.contains("fundamental system"), "{stderr}");
}

#[test]
fn hypothesis_outside_the_system_is_a_query_error() {
    let (code, _, stderr) = run(&[
        "bayes",
        "--space",
        &fixture("uniform4.json"),
        "--hypothesis",
        "C",
        "--event",
        "B",
        "--part",
        "H1",
        "--part",
        "H2",
    ]);
    assert_eq!(code, 4);
    assert!(stderr.contains("hypothesis"), "{stderr}");
}

#[test]
fn verify_cap_is_a_query_error() {
    let (code, _, stderr) = run(&[
        "verify",
        "--space",
        &fixture("uniform4.json"),
        "--cap",
        "3",
    ]);
    assert_eq!(code, 4);
    assert!(stderr.contains("exceeds the verification cap"), "{stderr}");
}

#[test]
fn conditioning_on_nothing_inline() {
    // inline atom lists work like named events
    let (code, stdout, _) = run(&[
        "cond",
        "--space",
        &fixture("uniform4.json"),
        "--event",
        "1,2",
        "--given",
        "2,3",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("1/2*e + 1/2*e+ = 1/2 + 0*j"), "{stdout}");
}

#[test]
fn json_output_is_structured() {
    let (code, stdout, _) = run(&[
        "prob",
        "--space",
        &fixture("eregime.json"),
        "--event",
        "A",
        "--json",
    ]);
    assert_eq!(code, 0);
    let parsed: serde_json::Value = serde_json::from_str(&stdout).expect("valid json");
    assert_eq!(parsed["value"]["idempotent"], "1/2*e + 0*e+");
    assert_eq!(parsed["value"]["cartesian"], "1/4 + 1/4*j");
    assert_eq!(parsed["residuals"], serde_json::json!([]));
}

#[test]
fn verify_json_reports_every_law() {
    let (code, stdout, _) = run(&["verify", "--space", &fixture("eregime.json"), "--json"]);
    assert_eq!(code, 0);
    let parsed: serde_json::Value = serde_json::from_str(&stdout).expect("valid json");
    assert_eq!(parsed["all_passed"], serde_json::json!(true));
    assert_eq!(parsed["checks"].as_array().unwrap().len(), 15);
}

#[test]
fn json_output_is_deterministic() {
    let args = [
        "indep",
        "--space",
        &fixture("eregime.json"),
        "--a",
        "A",
        "--b",
        "B",
        "--json",
    ];
    let (_, first, _) = run(&args);
    let (_, second, _) = run(&args);
    assert_eq!(first, second);
}
