use std::process::{Command, Output};

fn daehee(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_daehee"))
        .args(args)
        .env_remove("DAEHEE_FORMAT")
        .env_remove("DAEHEE_REPORT_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = daehee(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

/// Values of the last CSV column, header dropped.
fn csv_values(text: &str) -> Vec<String> {
    text.lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().to_string())
        .collect()
}

fn json_values(text: &str) -> Vec<String> {
    let rows: Vec<serde_json::Value> = serde_json::from_str(text).unwrap();
    rows.iter()
        .map(|r| r["value"].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn higher_order_daehee_table() {
    let out = stdout(&["table", "daehee-higher", "n=0..2", "k=1..2"]);
    assert_eq!(out.lines().next(), Some("n,k,value"));
    assert!(out.lines().any(|l| l == "2,2,11/6"));
    assert_eq!(out.lines().count(), 7);
}

#[test]
fn stirling_table_with_flags() {
    let out = stdout(&["table", "stirling1", "--n", "0..4"]);
    assert!(out.lines().any(|l| l == "4,2,11"));
    assert!(out.lines().any(|l| l == "4,1,-6"));
}

#[test]
fn cauchy_table() {
    let out = stdout(&["table", "cauchy1", "n=0..2"]);
    assert_eq!(csv_values(&out), ["1", "1/2", "-1/6"]);
}

#[test]
fn generating_functions() {
    let d = stdout(&["gf", "daehee", "--k", "1", "--order", "3"]);
    assert_eq!(csv_values(&d), ["1", "-1/2", "2/3", "-3/2"]);
    let b = stdout(&["gf", "bernoulli", "--k", "2", "--order", "2"]);
    assert_eq!(csv_values(&b), ["1", "-1", "5/6"]);
    let d2 = stdout(&["gf", "daehee", "--k", "2", "--order", "2"]);
    assert_eq!(csv_values(&d2), ["1", "-1", "11/6"]);
}

#[test]
fn csv_and_json_agree() {
    for args in [
        vec!["table", "daehee-poly", "n=0..3", "k=1..2", "x=0,-1/2"],
        vec!["table", "gen-daehee", "--alpha", "0,1/2", "--r", "1,2", "--k", "1..3"],
        vec!["table", "comtet", "--alpha", "1,2"],
    ] {
        let csv = stdout(&[args.as_slice(), &["--format", "csv"]].concat());
        let json = stdout(&[args.as_slice(), &["--format", "json"]].concat());
        assert_eq!(csv_values(&csv), json_values(&json), "{args:?}");
    }
}

#[test]
fn format_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_daehee"))
        .args(["table", "daehee", "n=0..1"])
        .env("DAEHEE_FORMAT", "json")
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(json_values(&text), ["1", "-1/2"]);
}

#[test]
fn eval_single_values() {
    let out = stdout(&["eval", "poly-cauchy", "--alpha", "0", "--limits", "1"]);
    assert_eq!(csv_values(&out), ["1/2"]);
    let second = stdout(&["eval", "poly-cauchy", "--alpha", "0", "--limits", "1", "--kind", "second"]);
    assert_eq!(csv_values(&second), ["-1/2"]);
    let many = daehee(&["eval", "daehee", "n=0..3"]);
    assert_eq!(many.status.code(), Some(2));
}

#[test]
fn comtet_row_for_two_roots() {
    let out = stdout(&["table", "comtet", "--alpha", "1,2"]);
    assert_eq!(csv_values(&out), ["2", "-3", "1"]);
}

#[test]
fn verify_single_claim() {
    let out = daehee(&["verify", "C3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let claims = report["claims"].as_array().unwrap();
    assert_eq!(claims.len(), 1);
    assert_eq!(claims[0]["id"], "C3");
    assert_eq!(claims[0]["fail"], 0);
}

#[test]
fn verify_reports_stated_failures_but_exits_zero() {
    let out = daehee(&["verify", "C11", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let stated = &report["claims"][0];
    assert_eq!(stated["variant"], "as_stated");
    assert!(stated["fail"].as_u64().unwrap() > 0);
    assert!(stated.get("counterexample").is_some());
    assert_eq!(report["claims"][1]["fail"], 0);
}

#[test]
fn verify_is_deterministic_and_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for (path, extra) in [(&a, None), (&b, Some("--sequential"))] {
        let mut args = vec!["verify", "C4", "C11", "--format", "json", "--output", path.to_str().unwrap()];
        args.extend(extra);
        assert_eq!(daehee(&args).status.code(), Some(0));
    }
    let first = std::fs::read(&a).unwrap();
    assert!(!first.is_empty());
    assert_eq!(first, std::fs::read(&b).unwrap());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(daehee(&["verify", "C999"]).status.code(), Some(2));
    assert_eq!(daehee(&["table", "nonsense"]).status.code(), Some(2));
    assert_eq!(daehee(&["table", "daehee", "n=3..1"]).status.code(), Some(2));
    assert_eq!(daehee(&["table", "gen-daehee", "--alpha", "0,1", "--r", "1"]).status.code(), Some(2));
    assert_eq!(daehee(&["table", "daehee-higher", "n=1", "k=0"]).status.code(), Some(2));
    assert_eq!(daehee(&["table", "daehee", "bogus=1"]).status.code(), Some(2));
}

#[test]
fn rendering_is_lossless() {
    let out = stdout(&["table", "bernoulli", "n=0..12"]);
    for v in csv_values(&out) {
        let parsed = daehee_core::rat::parse(&v).unwrap();
        assert_eq!(parsed.to_string(), v);
    }
}
