use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn covtool(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_covtool")).args(args).output().expect("covtool runs")
}

fn put(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_owned()
}

const FIGURE_EIGHT: &str = "v o\ne x o o\ne y o o\n";
const THETA: &str = "v p\nv q\ne a p q\ne b p q\ne c q p\ne d q p\n";
const TORUS: &str = "gens: a b\nrel: a b a- b-\n";

#[test]
fn validate_accepts_and_rejects() {
    let dir = TempDir::new().unwrap();
    for (name, text) in [("g.graph", FIGURE_EIGHT), ("t.pres", TORUS)] {
        let out = covtool(&["validate", &put(&dir, name, text)]);
        assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
    }
    let bad = put(&dir, "bad.graph", "v o\ne x o nowhere\n");
    assert!(!covtool(&["validate", &bad]).status.success());
    let unknown = put(&dir, "g.txt", FIGURE_EIGHT);
    assert!(!covtool(&["validate", &unknown]).status.success());
}

#[test]
fn presentation_complex_then_triangulate() {
    let dir = TempDir::new().unwrap();
    let pres = put(&dir, "t.pres", TORUS);
    let cplx = path(&dir, "t.cplx");
    assert!(covtool(&["presentation-complex", &pres, "-o", &cplx]).status.success());
    assert!(covtool(&["validate", &cplx]).status.success());
    let tri = path(&dir, "tri.cplx");
    assert!(covtool(&["triangulate", &cplx, "-o", &tri]).status.success());
    assert!(covtool(&["validate", &tri]).status.success());
    let printed = covtool(&["triangulate", &cplx]);
    assert!(printed.status.success());
    assert_eq!(String::from_utf8(printed.stdout).unwrap(), std::fs::read_to_string(&tri).unwrap());
}

#[test]
fn low_index_lists_the_torus_subgroups() {
    let dir = TempDir::new().unwrap();
    let out = covtool(&["low-index", &put(&dir, "t.pres", TORUS), "-n", "2"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let indices: Vec<u64> = v.as_array().unwrap().iter().map(|s| s["index"].as_u64().unwrap()).collect();
    // the whole group and the three index-two subgroups of Z²
    assert_eq!(indices, [1, 2, 2, 2]);
}

#[test]
fn common_cover_then_verify_both_legs() {
    let dir = TempDir::new().unwrap();
    let (a, b) = (put(&dir, "a.graph", FIGURE_EIGHT), put(&dir, "b.graph", THETA));
    let c = path(&dir, "c.graph");
    let out = covtool(&["common-cover", &a, &b, "-o", &c]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let (to_a, to_b) = (path(&dir, "c.to-a.json"), path(&dir, "c.to-b.json"));
    assert!(Path::new(&to_a).exists() && Path::new(&to_b).exists());
    for (base, map) in [(&a, &to_a), (&b, &to_b)] {
        let out = covtool(&["verify-cover", "--total", &c, "--base", base, "--map", map]);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    }
    // a leg checked against the wrong base is rejected
    assert!(!covtool(&["verify-cover", "--total", &c, "--base", &a, "--map", &to_b]).status.success());
}

#[test]
fn paper_verify_writes_a_report() {
    let dir = TempDir::new().unwrap();
    let report = path(&dir, "report.json");
    let out = covtool(&[
        "paper-verify",
        "--max-index",
        "2",
        "--ball-radius",
        "1",
        "--torsion-free-max-index",
        "4",
        "--schreier-max-index",
        "3",
        "--report",
        &report,
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["status"] != "fail"));
    assert_eq!(v["summary"]["fail"], 0);
    assert_eq!(v["config"]["maxIndex"], 2);
}

#[test]
fn paper_verify_rejects_a_zero_bound() {
    let out = covtool(&["paper-verify", "--max-index", "0"]);
    assert_eq!(out.status.code(), Some(2));
}
