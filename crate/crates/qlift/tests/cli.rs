use std::path::PathBuf;
use std::process::{Command, Output};

use qlift::fixtures;
use serde_json::Value;

fn qlift(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qlift")).args(args).output().expect("run qlift")
}

fn fixture(name: &str) -> String {
    fixtures::dir().join(name).display().to_string()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn tmp(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn lift_dim_prints_the_dimension() {
    let out = qlift(&["lift", "dim", "--spec", &fixture(fixtures::B2_Z3Z3)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "729");
}

#[test]
fn datum_search_lists_data() {
    let out = qlift(&["datum", "search", "--group", "3,3", "--type", "B2", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let list = v.as_array().unwrap();
    assert!(!list.is_empty());
    assert_eq!(list[0]["invariant_factors"], serde_json::json!([3, 3]));
}

#[test]
fn qbinom_verify_is_deterministic() {
    let a = qlift(&["qbinom", "verify", "--n-max", "6", "--seed", "7"]);
    let b = qlift(&["qbinom", "verify", "--n-max", "6", "--seed", "7", "--jobs", "1"]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["anchor"].as_str().is_some_and(|s| !s.is_empty())));
}

#[test]
fn nu_table_json() {
    let out = qlift(&["nu", "table", "--n", "4", "--q", "zeta(3)", "--b", "1", "--lambda", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["nu"].as_array().unwrap().len(), 5);
    assert_eq!(v["nu"][1], "1");
    // nu(2) = b^2 + lambda (1)_q = 3
    assert_eq!(v["nu"][2], "3");
}

#[test]
fn alg_commands() {
    let out = qlift(&["alg", "normalize", "--pres", &fixture(fixtures::B2_Z3Z3), "--word", "x1 x1 x1", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "0");

    let out = qlift(&["alg", "confluence", "--pres", &fixture(fixtures::B2_Z3Z3)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["confluent"], true);

    let out = qlift(&["alg", "confluence", "--pres", &fixture(fixtures::CORRUPTED)]);
    assert_eq!(out.status.code(), Some(4));
    let v = json(&out);
    assert_eq!(v["confluent"], false);
    assert_eq!(v["failures"][0]["overlap"], "x z t");
}

#[test]
fn hopf_commands() {
    let out = qlift(&["hopf", "delta", "--pres", &fixture(fixtures::B2_Z3Z3), "--elt", "x1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["terms"].as_array().unwrap().len(), 2);

    let out = qlift(&["hopf", "ideal-check", "--spec", &fixture(fixtures::B2_Z9Z9)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["v_coefficient"], "(q^2-1)^n");
    assert_eq!(v["generators"].as_array().unwrap().len(), 4);
    assert_eq!(v["adjudication"]["chosen"], "(q^2-1)^n");
}

#[test]
fn lift_commands() {
    let out = qlift(&["lift", "build", "--spec", &fixture(fixtures::B2_Z9Z9)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["hopf_ideal"], true);

    let path = tmp("verify.json");
    let out = qlift(&["lift", "verify", "--spec", &fixture(fixtures::A2_Z3Z3), "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["report"]["passed"], true);
    assert_eq!(v["dimension"], 243);
}

#[test]
fn lift_quasi_absent_and_present() {
    let zero = tmp("a2_zero.json");
    let mut spec: Value = serde_json::from_str(&std::fs::read_to_string(fixtures::dir().join(fixtures::A2_Z3Z3)).unwrap()).unwrap();
    spec["gamma1"] = "0".into();
    spec["gamma2"] = "0".into();
    std::fs::write(&zero, spec.to_string()).unwrap();
    let out = qlift(&["lift", "quasi", "--spec", &fixture(fixtures::A2_Z3Z3), "--target", zero.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["status"], "absent");
    assert!(v["note"].as_str().unwrap().contains("gamma"));

    let only = tmp("a2_gamma1.json");
    spec["gamma1"] = "1".into();
    std::fs::write(&only, spec.to_string()).unwrap();
    let out = qlift(&["lift", "quasi", "--spec", zero.to_str().unwrap(), "--target", only.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["status"], "witness");
    assert_eq!(v["verified"], true);
    assert_eq!(v["chain"].as_array().unwrap().len(), 1);
}

#[test]
fn exit_codes() {
    // usage
    assert_eq!(qlift(&["lift"]).status.code(), Some(2));
    assert_eq!(qlift(&["lift", "quasi", "--spec", &fixture(fixtures::B2_Z3Z3)]).status.code(), Some(2));
    // validation: gamma = 1 is inadmissible on Z3 x Z3
    let bad = tmp("bad.json");
    let mut spec: Value = serde_json::from_str(&std::fs::read_to_string(fixtures::dir().join(fixtures::B2_Z3Z3)).unwrap()).unwrap();
    spec["gamma"] = "1".into();
    std::fs::write(&bad, spec.to_string()).unwrap();
    let out = qlift(&["lift", "dim", "--spec", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("inadmissible"));
    let out = qlift(&["nu", "table", "--n", "3", "--q", "zeta(", "--b", "1", "--lambda", "1"]);
    assert_eq!(out.status.code(), Some(3));
    // other: missing file
    assert_eq!(qlift(&["lift", "dim", "--spec", "/nonexistent/spec.json"]).status.code(), Some(1));
}
