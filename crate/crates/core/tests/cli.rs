//! End-to-end runs of the binary.

mod common;

use std::path::Path;
use std::process::{Command, Output};

use common::WORKED_EXAMPLE;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_germ-bounds"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn analyze_worked_example() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "ex.ideal", WORKED_EXAMPLE);
    let out = run(&["analyze", &input]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report = json(&out);
    assert_eq!(report["multiplicity_mu"], 3);
    assert_eq!(report["dimension_d"], 1);
    assert_eq!(report["density_bound"], 3);
    assert_eq!(report["op_baseline_density"].to_string(), "561");
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "ex.ideal", WORKED_EXAMPLE);
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let out = run(&["analyze", &input, "-o", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
}

#[test]
fn parse_error_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "bad.ideal", "vars x,y;\nx^2 + * y;\n");
    assert_eq!(run(&["analyze", &input]).status.code(), Some(2));
}

#[test]
fn unit_ideal_is_a_hypothesis_failure_with_partial_report() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "unit.ideal", "vars x,y;\n1 + x;\n");
    let out = run(&["analyze", &input]);
    assert_eq!(out.status.code(), Some(4));
    let report = json(&out);
    assert_eq!(report["n"], 2);
    assert!(report["multiplicity_mu"].is_null());
}

#[test]
fn missing_input_is_an_io_error() {
    assert_eq!(run(&["analyze", "/nonexistent/input.ideal"]).status.code(), Some(1));
}

#[test]
fn family_output_round_trips_through_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g2.ideal");
    let out = run(&["family", "g", "--l", "2", "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["n"], 3);
    assert_eq!(report["multiplicity_mu"], 4);
}

#[test]
fn family_transforms_add_a_variable() {
    let out = run(&["family", "f", "--l", "2", "--transform", "embed"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("vars x, y, z, w") || text.contains("vars x,y,z,w"), "{text}");
}

#[test]
fn crofton_prints_square_matrix() {
    let out = run(&["crofton", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<Vec<&str>> = text.lines().map(|l| l.split_whitespace().collect()).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r.len() == 3));
    assert_eq!(rows[0][1], "0.570796326795");
    assert_eq!(rows[2][0], "0");
}

#[test]
fn betti0_counts_a_circle() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "circle.ideal", "vars x,y,z;\nx^2 + y^2 - z^2;\n");
    let csv = dir.path().join("cells.csv");
    let out = run(&[
        "betti0",
        &input,
        "--fix",
        "z=1/2",
        "--box=-1,1,-1,1",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["count"], 1);
    assert_eq!(v["status"], "certified-lower-bound");
    let cells = std::fs::read_to_string(csv).unwrap();
    assert!(cells.starts_with("x_min,x_max,y_min,y_max,class"));
}

#[test]
fn betti0_leaf_budget_is_a_resource_error() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "circle.ideal", "vars x,y;\nx^2 + y^2 - 1/4;\n");
    let out = run(&["betti0", &input, "--box=-1,1,-1,1", "--res", "1/1024", "--leaf-budget", "10"]);
    assert_eq!(out.status.code(), Some(3));
}
