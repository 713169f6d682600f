use std::process::{Command, Output};

use serde_json::Value;

fn pcube(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pcube")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = pcube(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&all)).unwrap()
}

#[test]
fn count_examples() {
    let v = json(&["count", "--p", "2", "--n", "4"]);
    assert_eq!(v["vertices"], "6");
    assert_eq!(v["edges"], "6");
    assert_eq!(v["weight_census"], serde_json::json!(["1", "4", "1"]));
    let v = json(&["count", "--p", "0", "--n", "5"]);
    assert_eq!((v["vertices"].as_str(), v["edges"].as_str()), (Some("32"), Some("80")));
    let v = json(&["count", "--p", "3", "--n", "0"]);
    assert_eq!((v["vertices"].as_str(), v["edges"].as_str()), (Some("1"), Some("0")));
}

#[test]
fn count_over_a_range() {
    let v = json(&["count", "--p", "1", "--n", "0..=5"]);
    let vertices: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["vertices"].as_str().unwrap()).collect();
    assert_eq!(vertices, ["1", "2", "3", "5", "8", "13"]);
    let csv = stdout(&["count", "--p", "1", "--n", "0..=2", "--format", "csv"]);
    assert_eq!(csv, "p,n,vertices,edges,max_weight\n1,0,1,0,0\n1,1,2,1,1\n1,2,3,2,1\n");
}

#[test]
fn counts_grow_past_machine_words() {
    let v = json(&["count", "--p", "1", "--n", "200"]);
    assert_eq!(v["vertices"], "734544867157818093234908902110449296423351");
}

#[test]
fn polynomials() {
    assert!(stdout(&["poly", "cube", "--p", "1", "--n", "3"]).contains("5 + 5*x + x^2"));
    assert!(stdout(&["poly", "distance", "--p", "1", "--n", "3"]).contains("2*x*q"));
    assert!(stdout(&["poly", "weight", "--p", "2", "--n", "4"]).contains("1 + 4*x + x^2"));
    let v = json(&["poly", "cube", "--p", "1", "--n", "3"]);
    assert_eq!(v["coeffs"], serde_json::json!(["5", "5", "1"]));
    let v = json(&["poly", "distance", "--p", "1", "--n", "3"]);
    let term = v["terms"].as_array().unwrap().iter().find(|t| t["k"] == "1" && t["d"] == "1").unwrap();
    assert_eq!(term["value"], "2");
}

#[test]
fn verify_passes_and_reports_oracle_only_cases() {
    let out = stdout(&["verify", "all", "--p", "1..3", "--n", "0..8", "--N", "12"]);
    assert!(!out.contains("FAIL"));
    assert!(out.contains("theorem not applicable (n < p), oracle-only"));
    let quiet = stdout(&["verify", "gf", "--p", "0..=2", "--n", "0..6", "--quiet"]);
    assert!(quiet.lines().all(|l| l.starts_with("PASS") || l.starts_with("N/A")), "{quiet}");
    let v = json(&["verify", "indices", "--p", "2", "--n", "0..6"]);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn indices_closed_and_oracle() {
    let v = json(&["indices", "--p", "1", "--n", "3"]);
    assert_eq!(v["wiener"]["closed"], "16");
    assert_eq!(v["wiener"]["oracle"], "16");
    assert_eq!(v["mostar"]["closed"], "7");
    assert_eq!(v["irregularity"]["oracle"], "4");
    let v = json(&["indices", "--p", "3", "--n", "2"]);
    assert!(v["irregularity"]["closed"].is_null());
    assert_eq!(v["irregularity"]["oracle"], "2");
    let v = json(&["indices", "--p", "1", "--n", "40"]);
    assert!(v["wiener"]["oracle"].is_null());
    assert!(v["wiener"]["closed"].is_string());
}

#[test]
fn export_and_caps() {
    let dot = stdout(&["export", "--p", "1", "--n", "3", "--format", "dot"]);
    assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 5);
    let v = json(&["export", "--p", "2", "--n", "5"]);
    assert_eq!(v["adjacency"].as_array().unwrap().len(), 9);
    let out = pcube(&["export", "--p", "2", "--n", "24"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
    let out = pcube(&["export", "--p", "2", "--n", "10", "--cap", "10"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn exported_json_parses_back() {
    let text = stdout(&["export", "--p", "2", "--n", "7", "--format", "json"]);
    let g = pcube::export::parse_graph_json(&text).unwrap();
    assert_eq!((g.p(), g.n(), g.order()), (2, 7, 19));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(pcube(&["count", "--p", "x", "--n", "3"]).status.code(), Some(2));
    assert_eq!(pcube(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(pcube(&["poly", "cube", "--p", "1", "--n", "5..2"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["export", "--p", "1", "--n", "6", "--format", "json"][..],
        &["verify", "all", "--p", "1..3", "--n", "0..6", "--format", "json"],
        &["indices", "--p", "2", "--n", "7"],
    ] {
        assert_eq!(stdout(args), stdout(args));
    }
}
