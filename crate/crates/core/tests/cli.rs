//! Exit codes and output shape of the `endoreg` binary.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

const SAMPLE: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/sample.json");

fn endoreg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_endoreg")).args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    endoreg(args).status.code().expect("exited normally")
}

fn scratch(body: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(body.as_bytes()).unwrap();
    f
}

fn path(f: &tempfile::NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn sample_workspace_is_valid() {
    assert!(Path::new(SAMPLE).exists());
    assert_eq!(code(&["validate", SAMPLE]), 0);
    let out = endoreg(&["--json", "validate", SAMPLE]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["valid"], true);
    assert_eq!(v["modules"], 3);
}

#[test]
fn suite_on_sample_passes() {
    assert_eq!(code(&["suite", SAMPLE]), 0);
}

#[test]
fn analyze_json_reports_the_plane() {
    let out = endoreg(&["--json", "analyze", SAMPLE, "plane"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["order"], 4);
    assert_eq!(v["end_order"], 16);
}

#[test]
fn search_stream_is_one_json_object_per_line() {
    let out = endoreg(&["--json", "search", SAMPLE, "--count", "2", "--seed", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().count() > 0);
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["object"].is_string() && v["check"].is_string());
    }
}

#[test]
fn incidence_on_diamond() {
    let out = endoreg(&["--json", "incidence", SAMPLE, "diamond", "Z2"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pairs"].as_array().unwrap().len(), 9);
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(code(&["analyze", SAMPLE, "no_such_module"]), 2);
    assert_eq!(code(&["incidence", SAMPLE, "diamond", "UT2", "--module", "Z2"]), 2);
    assert_eq!(code(&["validate", "/nonexistent/workspace.json"]), 2);

    let broken = scratch("{ \"rings\": ");
    assert_eq!(code(&["validate", path(&broken)]), 2);

    let bad_law = scratch(
        r#"{"rings": {"Z4": {"moduli": [4], "mul": [[[1]]], "one": [1]}},
            "modules": {"M": {"ring": "Z4", "moduli": [2], "action": [[[0]]]}}}"#,
    );
    assert_eq!(code(&["validate", path(&bad_law)]), 2);

    let intransitive = scratch(
        r#"{"posets": {"p": {"elements": ["a", "b", "c"], "relation": [["a", "b"], ["b", "c"]]}}}"#,
    );
    assert_eq!(code(&["validate", path(&intransitive)]), 2);
}
