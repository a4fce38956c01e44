use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn setfam(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_setfam")).args(args).output().expect("binary runs")
}

fn setfam_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_setfam"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("bad json ({e}): {}\nstderr: {}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    })
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn construct_katona() {
    let out = setfam(&["construct", "--family", "katona", "--n", "5", "--u", "2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["n"], 5);
    assert_eq!(v["sets"].as_array().unwrap().len(), 6);
}

#[test]
fn search_overflow_even_small() {
    let out = setfam(&["search", "--objective", "overflow-even", "--n", "6", "--d", "1"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["optimum"], "1");
    assert_eq!(v["proven_optimal"], true);
}

#[test]
fn check_b_family_is_union_bounded() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("b.json");
    let out = setfam(&["construct", "--family", "b-family", "--n", "6", "--d", "2", "-o", p(&file)]);
    assert_eq!(code(&out), 0);
    let out = setfam(&["check", "--pred", "u-union", "--u", "4", "-i", p(&file)]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["holds"], true);
    let out = setfam(&["check", "--pred", "u-union", "--u", "3", "-i", p(&file)]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["holds"], false);
}

#[test]
fn search_outputs_recheck() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[&[&str]] = &[
        &["--objective", "max-union-size", "--n", "5", "--u", "3"],
        &["--objective", "max-diameter-size", "--n", "5", "--u", "2"],
        &["--objective", "overflow-odd", "--n", "5", "--d", "1"],
        &["--objective", "upper-layers", "--n", "6", "--u", "3"],
        &["--objective", "diversity", "--n", "5", "--k", "2"],
        &["--objective", "diametral-overflow", "--n", "4", "--u", "2"],
        &["--objective", "max-union-size", "--n", "5", "--u", "2", "--restrict", "false", "--workers", "3"],
    ];
    for (i, args) in cases.iter().enumerate() {
        let file = dir.path().join(format!("cert{i}.json"));
        let mut full = vec!["search"];
        full.extend_from_slice(args);
        full.extend_from_slice(&["-o", p(&file)]);
        let out = setfam(&full);
        assert_eq!(code(&out), 0, "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        let out = setfam(&["recheck", p(&file)]);
        assert_eq!(code(&out), 0, "{args:?}");
        assert_eq!(json(&out)["holds"], true);
    }
}

#[test]
fn tampered_certificate_fails_recheck() {
    let out = setfam(&["search", "--objective", "max-union-size", "--n", "5", "--u", "2"]);
    let mut v = json(&out);
    v["optimum"] = Value::String("7".into());
    let out = setfam_stdin(&["recheck", "-"], &v.to_string());
    assert_eq!(code(&out), 1);
}

#[test]
fn round_trip_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let c = dir.path().join("c.json");
    assert_eq!(code(&setfam(&["construct", "--family", "g-family", "--n", "7", "--d", "2", "-o", p(&a)])), 0);
    assert_eq!(code(&setfam(&["transform", "closure", "-i", p(&a), "-o", p(&b)])), 0);
    assert_eq!(code(&setfam(&["transform", "closure", "-i", p(&b), "-o", p(&c)])), 0);
    assert_eq!(std::fs::read(&b).unwrap(), std::fs::read(&c).unwrap());
    // the same input through stdin gives the same bytes
    let text = std::fs::read_to_string(&a).unwrap();
    let out = setfam_stdin(&["transform", "closure"], &text);
    assert_eq!(out.stdout, std::fs::read(&b).unwrap());
}

#[test]
fn shift_initial_writes_log() {
    let dir = tempfile::tempdir().unwrap();
    let log = dir.path().join("log.json");
    let input = r#"{"n": 4, "sets": [[3, 4], [2, 4]]}"#;
    let out = setfam_stdin(&["transform", "shift-initial", "--log", p(&log)], input);
    assert_eq!(code(&out), 0);
    let fam = json(&out);
    assert_eq!(fam["sets"], serde_json::json!([[1, 2], [1, 3]]));
    let log: Value = serde_json::from_str(&std::fs::read_to_string(&log).unwrap()).unwrap();
    assert!(!log["ops"].as_array().unwrap().is_empty());
    assert!(log["passes"].as_u64().unwrap() >= 1);
    let out = setfam_stdin(&["check", "--pred", "initial"], &fam.to_string());
    assert_eq!(code(&out), 0);
}

#[test]
fn overflow_and_walks() {
    let fam = r#"{"n": 5, "sets": [[1, 2], [1, 3], [2, 3]]}"#;
    let out = setfam_stdin(&["overflow", "--u", "2"], fam);
    assert_eq!(json(&out)["value"], "3");
    // all three lie within distance 1 of {1,2,3}
    let out = setfam_stdin(&["overflow", "--u", "2", "--diametral"], fam);
    assert_eq!(json(&out)["value"], "0");
    assert_eq!(json(&out)["center"], serde_json::json!([1, 2, 3]));
    let out = setfam(&["walks", "count", "--n", "10", "--k", "4", "--t", "2", "--a", "1", "--b", "1", "--brute"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["count"], "8");
    let out = setfam(&["walks", "trace", "--n", "3", "--set", "1,3"]);
    assert_eq!(json(&out)["endpoint"], serde_json::json!([1, 2]));
    let out = setfam_stdin(&["walks", "verify-hits", "--t", "1"], r#"{"n": 4, "sets": [[2, 4]]}"#);
    assert_eq!(code(&out), 1);
}

#[test]
fn bounds_and_verify() {
    let out = setfam(&["bound", "katona", "--n", "7", "--u", "4"]);
    assert_eq!(json(&out)["value"], "29");
    let out = setfam(&["bound", "quintic", "--c", "13/10"]);
    assert_eq!(json(&out)["sign"], "negative");
    let out = setfam(&["bound", "hilton", "--n", "4", "--a", "1", "--b", "2"]);
    assert_eq!(code(&out), 0);
    assert!(json(&out)["counterexample"].is_null());
    let out = setfam(&["verify", "hilton"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["violation_count"], "0");
    let out = setfam(&["verify", "reflection", "--max-n", "6"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn exit_codes() {
    // usage
    assert_eq!(code(&setfam(&["construct"])), 2);
    assert_eq!(code(&setfam(&["search", "--objective", "nope", "--n", "5", "--u", "2"])), 2);
    // validation
    assert_eq!(code(&setfam(&["search", "--objective", "overflow-even", "--n", "4", "--d", "2"])), 2);
    assert_eq!(code(&setfam_stdin(&["check", "--pred", "complex"], "{\"n\": 3, \"sets\": [[4]]}")), 2);
    // caps
    assert_eq!(code(&setfam(&["search", "--objective", "max-union-size", "--n", "40", "--u", "2"])), 3);
    assert_eq!(
        code(&setfam(&["search", "--objective", "max-union-size", "--n", "9", "--u", "5", "--restrict", "false"])),
        3
    );
}

#[test]
fn time_limit_writes_best_so_far() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("cert.json");
    let out = setfam(&[
        "search", "--objective", "upper-layers", "--n", "12", "--u", "6", "--no-prune", "--time-limit", "0.2", "-o",
        p(&file),
    ]);
    assert_eq!(code(&out), 3);
    let cert: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(cert["proven_optimal"], false);
    assert_eq!(code(&setfam(&["recheck", p(&file)])), 0);
}

#[test]
fn table_format() {
    let out = setfam(&["--format", "table", "construct", "--family", "katona", "--n", "3", "--u", "2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("{1} {2} {3}"), "{text}");
}
