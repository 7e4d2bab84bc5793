//! Contract tests for the `subsetlab` binary: exit codes, byte-identical
//! artifacts, and the JSON formats of every subcommand.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_subsetlab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn tmp(name: &str) -> (tempfile::TempDir, PathBuf) {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join(name);
    (dir, path)
}

#[test]
fn verify_passes_and_reports() {
    let (dir, out) = tmp("report.json");
    let output = run(&[
        "verify",
        "hadamard",
        "--seed",
        "7",
        "--trials",
        "200",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(
        output.status.success(),
        "{}",
        String::from_utf8_lossy(&output.stderr)
    );
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(stdout.contains("checks passed"));
    let text = std::fs::read_to_string(&out).unwrap();
    let report: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(report["suite"], "hadamard");
    assert_eq!(report["seed"], 7);
    assert!(report["checks"].as_array().unwrap().len() >= 4);
    assert_eq!(report["artifacts"][0], out.to_str().unwrap());

    // Same command and seed reproduce the report byte for byte.
    let output = run(&[
        "verify",
        "hadamard",
        "--seed",
        "7",
        "--trials",
        "200",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(output.status.success());
    assert_eq!(text, std::fs::read_to_string(&out).unwrap());
    drop(dir);
}

#[test]
fn verify_unknown_suite_is_usage_error() {
    let output = run(&["verify", "bogus", "--seed", "1"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn verify_failure_exits_one_with_witness() {
    // An unattainable tolerance forces check failures deterministically.
    let output = run(&["verify", "metric", "--trials", "50", "--tol=-1"]);
    assert_eq!(output.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("failed check"), "stderr: {stderr}");
}

#[test]
fn bounds_are_byte_identical_and_contain_reference_row() {
    let (dir, out1) = tmp("bounds1.csv");
    let out2 = dir.path().join("bounds2.csv");
    for out in [&out1, &out2] {
        let output = run(&[
            "bounds",
            "--n-min",
            "4",
            "--n-max",
            "10",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert!(output.status.success());
        let stdout = String::from_utf8_lossy(&output.stdout);
        assert!(stdout.contains("7 rows"), "stdout: {stdout}");
    }
    let b1 = std::fs::read(&out1).unwrap();
    let b2 = std::fs::read(&out2).unwrap();
    assert_eq!(b1, b2, "bound tables differ between runs");
    let text = String::from_utf8(b1).unwrap();
    let row = text.lines().find(|l| l.starts_with("10,9,")).unwrap();
    assert!(row.contains("2.183099"), "row: {row}");
    assert!(row.contains("1.091549"));
    drop(dir);
}

#[test]
fn bounds_empty_range_is_usage_error() {
    let output = run(&["bounds", "--n-min", "10", "--n-max", "4"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn bounds_all_k_row_count() {
    let output = run(&["bounds", "--n-min", "4", "--n-max", "8", "--all-k"]);
    assert!(output.status.success());
    let stdout = String::from_utf8_lossy(&output.stdout);
    // sum of (n-1) for n in 4..=8
    assert!(stdout.contains("25 rows"), "stdout: {stdout}");
}

#[test]
fn estimate_is_reproducible() {
    let (dir, out1) = tmp("cert1.json");
    let out2 = dir.path().join("cert2.json");
    for out in [&out1, &out2] {
        let output = run(&[
            "estimate",
            "--map",
            "scale:2",
            "--n",
            "2",
            "--seed",
            "5",
            "--trials",
            "16",
            "--steps",
            "20",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert!(
            output.status.success(),
            "{}",
            String::from_utf8_lossy(&output.stderr)
        );
    }
    let c1 = std::fs::read(&out1).unwrap();
    assert_eq!(c1, std::fs::read(&out2).unwrap());
    let record: serde_json::Value = serde_json::from_slice(&c1).unwrap();
    assert_eq!(record["certificate"]["ratio"], 2.0);
    assert_eq!(record["config"]["seed"], 5);
    drop(dir);
}

#[test]
fn estimate_unknown_map_is_usage_error() {
    let output = run(&["estimate", "--map", "nope"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn cover_and_kcenter_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let points = dir.path().join("points.json");
    std::fs::write(
        &points,
        r#"{"space":{"kind":"circle","metric":"arclength"},"points":[{"angle":0.0},{"angle":3.141592653589793}]}"#,
    )
    .unwrap();

    let out = dir.path().join("cover.json");
    let output = run(&[
        "cover",
        "--points",
        points.to_str().unwrap(),
        "--k",
        "1",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(
        output.status.success(),
        "{}",
        String::from_utf8_lossy(&output.stderr)
    );
    let cover: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let mid = cover["cover"]["points"][0]["angle"].as_f64().unwrap();
    assert!((mid - std::f64::consts::FRAC_PI_2).abs() < 1e-9);

    let interval_points = dir.path().join("line.json");
    std::fs::write(
        &interval_points,
        r#"{"space":{"kind":"interval","a":0.0,"b":1.0},"points":[0.0,0.1,0.5,0.9,1.0]}"#,
    )
    .unwrap();
    let out = dir.path().join("kcenter.json");
    let output = run(&[
        "kcenter",
        "--points",
        interval_points.to_str().unwrap(),
        "--k",
        "2",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(output.status.success());
    let result: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert!((result["radius"].as_f64().unwrap() - 0.25).abs() < 1e-12);
    assert_eq!(result["centers"].as_array().unwrap().len(), 2);
    assert_eq!(result["space"]["kind"], "interval");
}

#[test]
fn kcenter_unsupported_space_fails_cleanly() {
    let dir = tempfile::tempdir().unwrap();
    let points = dir.path().join("plane.json");
    std::fs::write(
        &points,
        r#"{"space":{"kind":"euclidean","d":2},"points":[[0.0,0.0],[1.0,1.0]]}"#,
    )
    .unwrap();
    let output = run(&["kcenter", "--points", points.to_str().unwrap(), "--k", "1"]);
    assert_eq!(output.status.code(), Some(1));
}
