//! End-to-end tests of the command-line interface: exit codes, output
//! shapes, and determinism of the JSON emitters.

use std::process::{Command, Output};

fn hbmcg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hbmcg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

#[test]
fn verify_reports_success() {
    let out = hbmcg(&["verify", "--genus", "2", "--module", "H"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("43 relations checked"), "got: {text}");
    assert!(text.contains("0 failures"), "got: {text}");
}

#[test]
fn corrupted_generator_fails_verification() {
    let out = hbmcg(&[
        "verify",
        "--genus",
        "2",
        "--module",
        "H",
        "--corrupt-generator",
        "t1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn genus_below_two_is_rejected() {
    let out = hbmcg(&["presentation", "--genus", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("genus must be at least 2"));
}

#[test]
fn unknown_flags_exit_with_usage_code() {
    let out = hbmcg(&["homology", "--genus", "2", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn high_genus_report_needs_explicit_confirmation() {
    let out = hbmcg(&["report", "--max-genus", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--allow-slow"));
}

#[test]
fn homology_json_is_byte_identical_across_runs() {
    let args = ["homology", "--genus", "2", "--module", "H/L", "--ring", "Z/4"];
    let first = hbmcg(&args);
    let second = hbmcg(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);

    let parsed: serde_json::Value = serde_json::from_str(stdout(&first).trim()).unwrap();
    assert_eq!(parsed["genus"], 2);
    assert_eq!(parsed["module"], "H/L");
    assert_eq!(parsed["ring"], "Z/4");
    assert_eq!(parsed["degree"], 1);
}

#[test]
fn presentation_json_has_the_advertised_shape() {
    let out = hbmcg(&["presentation", "--genus", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["genus"], 2);
    assert_eq!(parsed["generators"].as_array().unwrap().len(), 6);
    assert_eq!(parsed["relations"].as_array().unwrap().len(), 43);
    let first = &parsed["relations"][0];
    for key in ["label", "lhs", "rhs"] {
        assert!(first.get(key).is_some(), "relation entry missing {key}");
    }
}

#[test]
fn report_flags_the_known_mismatch_row() {
    let out = hbmcg(&["report", "--max-genus", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    let mismatch_lines: Vec<&str> = text.lines().filter(|l| l.contains("MISMATCH")).collect();
    assert_eq!(mismatch_lines.len(), 1, "got: {text}");
    assert!(mismatch_lines[0].contains(" L "), "got: {}", mismatch_lines[0]);
    assert!(stderr(&out).contains("1 row(s) disagree"));
}

#[test]
fn out_flag_writes_the_same_payload_as_stdout() {
    let path = std::env::temp_dir().join("hbmcg-cli-test-out.json");
    let _ = std::fs::remove_file(&path);
    let direct = hbmcg(&["homology", "--genus", "2", "--module", "L"]);
    let to_file = hbmcg(&[
        "homology",
        "--genus",
        "2",
        "--module",
        "L",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(to_file.status.code(), Some(0));
    assert!(stdout(&to_file).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, stdout(&direct));
    let _ = std::fs::remove_file(&path);
}
