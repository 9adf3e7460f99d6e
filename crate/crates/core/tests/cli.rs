use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn spun(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spun"))
        .args(args)
        .env_remove("SPUN_THREADS")
        .output()
        .expect("spawn spun")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn flat_text_matches_worked_example() {
    let o = spun(&["flat", "--dim", "3", "--a", "1,0,0", "--p", "0,1,0"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    let first = out.lines().next().unwrap();
    assert_eq!(
        first,
        "x_{1,2} + 2x_{1,4} = 1; -x_{1,2} + 2x_{2,4} = -1; -x_{1,3} - x_{2,3} + 2x_{3,4} = 0"
    );
    assert!(out.contains("L_ap: dimension 3"));
    assert!(out.contains("cross-check against F_ap ∩ H_1: PASS"));
}

#[test]
fn flat_json_is_well_formed() {
    let o = spun(&["flat", "--dim", "2", "--a", "1/2,-1", "--p", "0,3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dimension"], 2);
    assert_eq!(v["cross_check"], true);
    assert_eq!(v["system"]["rows"].as_array().unwrap().len(), 2);
    assert_eq!(v["variables"].as_array().unwrap().len(), 3);
}

#[test]
fn bad_rational_reports_entry_and_column() {
    let o = spun(&["flat", "--dim", "2", "--a", "1,x", "--p", "0,0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--a: entry 2 at column 2"), "{}", stderr(&o));
}

#[test]
fn lattice_round_trip_through_reduce() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("grid.json");
    let report = dir.path().join("report.json");
    let o = spun(&["gen-lattice", "--dim", "2", "--side", "2", "--output", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = spun(&[
        "reduce",
        "--input",
        cfg.to_str().unwrap(),
        "--seed",
        "3",
        "--output",
        report.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), stderr(&o));
    let v: Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["n"], "4");
    assert_eq!(v["D"], "2");
    assert_eq!(v["Q"], "80");
    assert_eq!(v["pair_count"], "32");
    assert!(stdout(&o).contains("(A) PASS"));
}

#[test]
fn reduce_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("grid.json");
    fs::write(&cfg, r#"{"dimension": 3, "points": [["0","0","0"],["1","0","0"],["0","1","0"],["0","0","1/2"]]}"#).unwrap();
    let a = spun(&["reduce", "--input", cfg.to_str().unwrap(), "--seed", "9"]);
    let b = spun(&["reduce", "--input", cfg.to_str().unwrap(), "--seed", "9"]);
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), b.status.code());
}

#[test]
fn two_points_fail_only_the_strict_inequality() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("two.json");
    fs::write(&cfg, r#"{"dimension": 2, "points": [["0","0"],["1","0"]]}"#).unwrap();
    let o = spun(&["reduce", "--input", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["Q"], "4");
    assert_eq!(v["Q_prime"], "2");
    let summary = stderr(&o);
    assert!(summary.contains("(C) FAIL"), "{summary}");
    for k in ["A", "B", "D", "E"] {
        assert!(summary.contains(&format!("({k}) PASS")), "{summary}");
    }
}

#[test]
fn malformed_config_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.json");
    fs::write(&cfg, r#"{"dimension": 2, "points": [["0","0"],["1"]]}"#).unwrap();
    let o = spun(&["reduce", "--input", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("bad.json"));
    fs::write(&cfg, "{not json").unwrap();
    let o = spun(&["reduce", "--input", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn out_of_range_arguments_are_rejected() {
    assert_eq!(spun(&["verify", "--dim", "7"]).status.code(), Some(2));
    let o = spun(&["gen-lattice", "--dim", "3", "--side", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--allow-large"));
}

#[test]
fn verify_passes_and_detects_sign_fault() {
    let o = spun(&["verify", "--dim", "2", "--trials", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("all checks passed"));
    let o = spun(&["verify", "--dim", "2", "--trials", "5", "--inject-sign-fault"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn eta_inverse_prints_lift() {
    let o = spun(&["eta-inverse", "--dim", "2", "--y", "0,0,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "j = 1\nN(j) = 1\n");
}
