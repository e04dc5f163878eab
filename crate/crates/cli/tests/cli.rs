use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str], out: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_planar-ortho"))
        .args(args)
        .arg("--out")
        .arg(out)
        .output()
        .expect("binary runs")
}

fn read(dir: &Path, name: &str) -> Vec<u8> {
    std::fs::read(dir.join(name)).unwrap_or_else(|e| panic!("{}: {e}", dir.join(name).display()))
}

#[test]
fn identical_configs_give_identical_artifacts() {
    for args in [
        &["disk-exact", "--degree", "30"][..],
        &["pentagon", "--bits", "212", "--degrees", "10,20"][..],
    ] {
        let a = tempfile::tempdir().unwrap();
        let b = tempfile::tempdir().unwrap();
        let ra = run(args, a.path());
        let rb = run(args, b.path());
        assert!(ra.status.success(), "{}", String::from_utf8_lossy(&ra.stderr));
        assert!(rb.status.success());
        for name in ["report.csv", "report.json", "plot.svg"] {
            assert_eq!(read(a.path(), name), read(b.path(), name), "{args:?}: {name} differs");
        }
    }
}

#[test]
fn every_csv_row_carries_the_config_hash() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["disk-exact", "--degree", "20"], dir.path());
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&read(dir.path(), "report.json")).unwrap();
    let hash = json["config_hash"].as_str().unwrap().to_string();
    assert_eq!(hash.len(), 64);
    let csv = String::from_utf8(read(dir.path(), "report.csv")).unwrap();
    let mut lines = csv.lines();
    assert!(lines.next().unwrap().ends_with(",config_hash"));
    let mut rows = 0;
    for line in lines {
        assert!(line.ends_with(&hash), "{line}");
        rows += 1;
    }
    assert!(rows > 0);
    let svg = String::from_utf8(read(dir.path(), "plot.svg")).unwrap();
    assert!(svg.starts_with("<?xml") && svg.contains("version=\"1.1\""));
}

#[test]
fn config_errors_exit_with_one_and_point_at_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(&cfg, "{\n  \"experiment\": \"disk-exact\",\n  \"degrees\": [10, \"twenty\"]\n}\n").unwrap();
    let out = run(&["--config", cfg.to_str().unwrap()], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("cfg.json:3:") && err.contains("degrees[1]"), "{err}");

    let out = run(&["disk-exact", "--degrees", "30,20"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["disk-exact", "--degree", "200"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["disk-hole-zeros", "--a", "0.8", "--rho", "0.3"], dir.path());
    assert_eq!(out.status.code(), Some(1), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn failed_checks_exit_with_two_after_writing_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["disk-hole-zeros", "--bits", "212", "--degrees", "4"], dir.path());
    assert_eq!(out.status.code(), Some(2), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stderr).contains("assertion failed"));
    let json: serde_json::Value = serde_json::from_slice(&read(dir.path(), "report.json")).unwrap();
    assert!(json["checks"].as_array().unwrap().iter().any(|c| c["passed"] == false));
}

#[test]
fn numeric_failures_exit_with_three() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["pentagon", "--bits", "64", "--degrees", "40"], dir.path());
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(!dir.path().join("report.csv").exists());
}
