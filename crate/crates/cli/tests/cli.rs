use std::process::{Command, Output};

use atomic_leibniz::realization::Realization;
use atomic_leibniz::BigInt;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_atomic-leibniz")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = run(&full);
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v)
}

#[test]
fn three_su_su_cosets() {
    let (code, v) = json(&["cosets", "--type", "A", "--n", "4", "--I", "s,u", "--J", "s,u"]);
    assert_eq!(code, 0);
    let payload = &v["checks"][0]["payload"];
    assert_eq!(payload["count"], 3);
    let ys: Vec<&str> = payload["cosets"].as_array().unwrap().iter().map(|c| c["y_word"].as_str().unwrap()).collect();
    assert_eq!(ys, ["s2 s1 s3 s2", "s1 s3 s2", "e"]);
}

#[test]
fn s4_examples_pass() {
    let (code, v) = json(&["selftest", "--suite", "s4-examples"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], 3);
    assert_eq!(v["checks"][2]["payload"]["g"], "x1 + x2");
}

#[test]
fn closed_form_three_four() {
    let (code, v) = json(&["closed-form", "--a", "3", "--b", "4", "--imax", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], 6);
    let terms = &v["checks"][2]["payload"]["certificate"]["terms"];
    assert_eq!(terms[0]["T"], "x1 + x2 + x3 + x7");
    assert!(terms.as_array().unwrap()[1..].iter().all(|t| t["T"] == "0"));
}

#[test]
fn solve_t_reports_the_certificate() {
    let (code, v) = json(&["solve-t", "--s", "t", "--f", "x1*x2 + x3*x4", "--direction", "right"]);
    assert_eq!(code, 0);
    let cert = &v["checks"][0]["payload"];
    assert_eq!(cert["atom"]["min_word"], "s2 s1 s3 s2");
    assert_eq!(cert["unique"], true);
    // ∂_t(f) = x1 - x4, so T_q = su ∂_t(f) = x2 - x3
    assert_eq!(cert["terms"][0]["T"], "x2 - x3");
}

#[test]
fn forcing_and_dual_bases() {
    let (code, v) = json(&["forcing", "--s", "s", "--degmax", "3"]);
    assert_eq!(code, 0);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["payload"]["matches_rightward"] == true));
    let (code, v) = json(&["dualbases", "--J", "s1,s3", "--degmax", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["checks"][0]["payload"]["pairs"].as_array().unwrap().len(), 6);
}

#[test]
fn iterated_expansion() {
    let (code, v) = json(&["iterated", "--word", "t s", "--f", "x1^2", "--g", "x2*x3", "--g", "x1"]);
    assert_eq!(code, 0);
    assert_eq!(v["checks"].as_array().unwrap().len(), 3);
}

#[test]
fn rational_root_realization() {
    let (code, v) = json(&["--realization", "root", "--type", "B", "--n", "2", "--ring", "q", "solve-t", "--s", "s1", "--degmax", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["failed"], 0);
    assert_eq!(v["realization"], "root(B2) over Q");
}

#[test]
fn realization_from_file() {
    let cfg = Realization::<BigInt>::permutation(3).unwrap().config();
    let path = std::env::temp_dir().join(format!("realization-{}.json", std::process::id()));
    std::fs::write(&path, serde_json::to_string(&cfg).unwrap()).unwrap();
    let (code, v) = json(&["--realization", path.to_str().unwrap(), "solve-t", "--s", "s1", "--degmax", "3"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 0);
    assert!(v["passed"].as_u64().unwrap() > 0);
}

#[test]
fn failed_expectation_exits_one() {
    let out = run(&["probe-naive", "--I", "s,u", "--J", "s,u", "--min", "t", "--degmax", "3", "--expect", "feasible"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL"));
    let out = run(&["probe-naive", "--I", "s,u", "--J", "s,u", "--min", "t", "--degmax", "3", "--expect", "infeasible"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn config_errors_exit_two() {
    for args in [
        &["cosets", "--I", "q", "--J", "s"][..],
        &["--cap", "0", "cosets", "--I", "s", "--J", "s"],
        &["solve-t", "--s", "t", "--f", "x1"],
        &["iterated", "--word", "s s", "--f", "x1"],
        &["--realization", "/nonexistent.json", "cosets", "--I", "s", "--J", "s"],
        &["--type", "B", "cosets", "--I", "s", "--J", "s"],
        &["frobnicate"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["--seed", "11", "selftest", "--suite", "all"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["--seed", "11", "iterated", "--word", "s t u", "--f", "x1*x4"]);
    let d = run(&["--seed", "11", "iterated", "--word", "s t u", "--f", "x1*x4"]);
    assert_eq!(c.stdout, d.stdout);
}
