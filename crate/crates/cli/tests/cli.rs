use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const E1: &str = r#"{"points": 3, "opens": [[], [0], [0, 1, 2]]}"#;

fn topolab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_topolab")).args(args).output().expect("spawn topolab")
}

fn write_e1(dir: &Path) -> String {
    let path = dir.join("e1.json");
    fs::write(&path, E1).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn analyze_reports_the_classification() {
    let dir = tempfile::tempdir().unwrap();
    let out = topolab(&["analyze", &write_e1(dir.path())]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let c = &v["classification"];
    assert_eq!(c["is_t0"], false);
    assert_eq!(c["is_stable"], true);
    assert_eq!(c["is_locally_compact"], true);
    assert_eq!(c["is_weakly_sober"], true);
    assert_eq!(v["irreducible_closed_sets"], serde_json::json!([[1, 2], [0, 1, 2]]));
}

#[test]
fn compactify_with_sigma_writes_space_unit_and_labels() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_e1(dir.path());
    let target = dir.path().join("out");
    let out = topolab(&["compactify", &file, "--monad", "sigma", "--out", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let space: Value = serde_json::from_str(&fs::read_to_string(target.join("space.json")).unwrap()).unwrap();
    assert_eq!(space["points"], 2);
    let unit: Value = serde_json::from_str(&fs::read_to_string(target.join("unit.json")).unwrap()).unwrap();
    assert_eq!(unit["map"], serde_json::json!([0, 1, 1]));
    let sidecar: Value = serde_json::from_str(&fs::read_to_string(target.join("lifted.json")).unwrap()).unwrap();
    assert_eq!(sidecar["unit"], serde_json::json!(["↑{0}", "↑{0,1,2}", "↑{0,1,2}"]));
}

#[test]
fn compactify_fixes_the_point() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("point.json");
    fs::write(&path, r#"{"points": 1, "opens": [[], [0]]}"#).unwrap();
    let out = topolab(&["compactify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["space"]["points"], 1);
    assert_eq!(v["is_embedding"], true);
}

#[test]
fn hausdorff_reflection_of_e1_is_a_point() {
    let dir = tempfile::tempdir().unwrap();
    let out = topolab(&["reflect", &write_e1(dir.path()), "--via", "hausdorff"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["reflection"]["space"]["points"], 1);
    assert_eq!(v["reflection"]["unit"]["map"], serde_json::json!([0, 0, 0]));
}

#[test]
fn export_dot_emits_both_digraphs() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("dot");
    let out = topolab(&["export-dot", &write_e1(dir.path()), "--out", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let spec = fs::read_to_string(target.join("specialization.dot")).unwrap();
    assert!(spec.starts_with("digraph \"specialization\""));
    assert!(spec.contains("1 -> 0;") && spec.contains("2 -> 0;"));
    let lifted = fs::read_to_string(target.join("sigma.dot")).unwrap();
    assert!(lifted.contains("↑{0}"));
}

#[test]
fn corpus_counts() {
    let labeled = stdout_json(&topolab(&["corpus", "--max-points", "4"]));
    let counts: Vec<u64> = labeled["counts"].as_array().unwrap().iter().map(|c| c["count"].as_u64().unwrap()).collect();
    assert_eq!(counts, [1, 4, 29, 355]);
    let classes = stdout_json(&topolab(&["corpus", "--max-points", "4", "--up-to-homeo"]));
    let counts: Vec<u64> = classes["counts"].as_array().unwrap().iter().map(|c| c["count"].as_u64().unwrap()).collect();
    assert_eq!(counts, [1, 3, 9, 33]);
}

#[test]
fn check_exit_codes() {
    let pass = topolab(&["check", "--suite", "prop5.4", "--max-points", "3"]);
    assert_eq!(pass.status.code(), Some(0));
    let lines = String::from_utf8(pass.stdout).unwrap();
    assert!(lines.lines().all(|l| serde_json::from_str::<Value>(l).unwrap()["status"] == "pass"));

    let fail = topolab(&["check", "--suite", "monad-laws", "--max-points", "3", "--inject-fault", "sigma-mult-swap"]);
    assert_eq!(fail.status.code(), Some(1));

    assert_eq!(topolab(&["check", "--suite", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(topolab(&["check", "--inject-fault", "no-such-fault"]).status.code(), Some(2));
    assert_eq!(topolab(&["check", "--max-points", "6"]).status.code(), Some(2));
}

#[test]
fn invalid_space_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, r#"{"points": 2, "opens": [[0]]}"#).unwrap();
    assert_eq!(topolab(&["analyze", path.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(topolab(&["analyze", "/nonexistent/space.json"]).status.code(), Some(2));
    assert_eq!(topolab(&["compactify", path.to_str().unwrap(), "--monad", "beta"]).status.code(), Some(2));
}
