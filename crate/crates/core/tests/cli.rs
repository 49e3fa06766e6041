use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_gaugenorm"));
    cmd.env_remove("GAUGENORM_SEED");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn norm_of_diagonal() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "m.json", r#"{"n": 3, "re": [[3,0,0],[0,2,0],[0,0,1]]}"#);
    let out = run(&["norm", "--matrix", &m, "--spec", "kyfan:t=2"]);
    assert!(out.status.success());
    assert!((json(&out)["value"].as_f64().unwrap() - 5.0).abs() < 1e-12);
}

#[test]
fn norm_of_csv_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "m.csv", "3,0,0,0\n0,0,4,0\n");
    let out = run(&["norm", "--matrix", &m, "--spec", "lp:p=2"]);
    assert!((json(&out)["value"].as_f64().unwrap() - 5.0).abs() < 1e-12);
}

#[test]
fn dual_of_simple_operator() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.json", r#"{"terms": [[3, 1], [4, 1]]}"#);
    let out = run(&["dual", "--simple", &a, "--spec", "lp:p=2"]);
    assert!(out.status.success());
    let v = json(&out);
    assert!((v["value"].as_f64().unwrap() - 5.0).abs() < 1e-9);
    assert_eq!(v["method"], "witness_exact");
}

#[test]
fn dominate_equal_curves() {
    let dir = tempfile::tempdir().unwrap();
    let s = write(dir.path(), "s.json", r#"{"domain": "inf", "pieces": [[1, 2], [2, 1]]}"#);
    let out = run(&["dominate", "--left", &s, "--right", &s]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["dominates"], true);
    assert_eq!(v["transfer_holds"], true);
}

#[test]
fn dominate_rejects_peaked_left() {
    let dir = tempfile::tempdir().unwrap();
    let s = write(dir.path(), "s.json", r#"{"n": 2, "re": [[2,0],[0,0]]}"#);
    let t = write(dir.path(), "t.json", r#"{"n": 2, "re": [[1,0],[0,1]]}"#);
    let v = json(&run(&["dominate", "--left", &s, "--right", &t]));
    assert_eq!(v["dominates"], false);
    assert!(v["transfer_holds"].is_null());
    let v = json(&run(&["dominate", "--left", &s, "--right", &t, "--tol", "2"]));
    assert_eq!(v["dominates"], true);
}

#[test]
fn snumbers_in_both_formats() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "f.json", r#"{"domain": 4, "pieces": [[0.5, 2], [1.5, 5], [1, 2]]}"#);
    let v = json(&run(&["snumbers", "--step", &f]));
    assert_eq!(v["pieces"], serde_json::json!([[1.5, 5.0], [1.5, 2.0]]));
    let out = run(&["snumbers", "--step", &f, "--format", "csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "length,value\n1.5,5\n1.5,2\n");
}

#[test]
fn reconstruct_reports_estimate_and_truth() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "m.json", r#"{"n": 2, "re": [[3,0],[0,4]]}"#);
    let v = json(&run(&["reconstruct", "--matrix", &m, "--spec", "lp:p=2", "--budget", "200"]));
    assert!((v["truth"].as_f64().unwrap() - 5.0).abs() < 1e-12);
    assert!((v["estimate"].as_f64().unwrap() - 5.0).abs() < 1e-9);
    let out = run(&["reconstruct", "--matrix", &m, "--spec", "famsup:@missing.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_file_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.json", r#"{"terms": [[3, 1], [1, 0.5], [2, 2]]}"#);
    let f = write(dir.path(), "f.json", r#"{"domain": "inf", "pieces": [[0.5, 1.5], [2, 0.1]]}"#);
    let spec = format!("fnorm:@{f}");
    let one = dir.path().join("one.json");
    let out = run(&["dual", "--simple", &a, "--spec", &spec, "--seed", "7", "--out", one.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    let two = run(&["dual", "--simple", &a, "--spec", &spec, "--seed", "7"]);
    assert_eq!(fs::read(&one).unwrap(), two.stdout);

    // the environment seed stands in only for a missing --seed
    let env = bin().args(["dual", "--simple", &a, "--spec", &spec]).env("GAUGENORM_SEED", "7").output().unwrap();
    assert_eq!(env.stdout, two.stdout);
    let bad = bin().args(["dual", "--simple", &a, "--spec", &spec]).env("GAUGENORM_SEED", "x").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", "{\"terms\": [[1, 1],\n  [2 2]]}");
    let out = run(&["dual", "--simple", &bad, "--spec", "op"]);
    assert_eq!(out.status.code(), Some(2));
    let msg = String::from_utf8(out.stderr).unwrap();
    assert!(msg.contains("line 2"), "{msg}");

    let a = write(dir.path(), "a.json", r#"{"terms": [[1, 1]]}"#);
    assert_eq!(run(&["dual", "--simple", &a, "--spec", "lp:p=0.5"]).status.code(), Some(3));
    assert_eq!(run(&["dual", "--simple", &a, "--spec", "op", "--budget", "0"]).status.code(), Some(3));
    assert_eq!(run(&["norm", "--simple", &a, "--spec", "kyfan:t=x"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}
