use std::process::{Command, Output};

use trunc_pascal::format::RowJson;
use trunc_pascal::{row, TriangleSpec};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trunc-pascal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn row_formats() {
    assert_eq!(stdout(&["row", "--t", "4", "--n", "9", "--format", "csv"]), "1,9,36,84,125,117,48,0,0,0\n");
    assert_eq!(stdout(&["row", "--t", "1", "--n", "0", "--format", "csv"]), "1\n");
    assert_eq!(stdout(&["row", "--t", "1", "--n", "8", "--format", "csv"]), "1,7,20,28,14,0,0,0,0\n");
    assert_eq!(stdout(&["row", "--t", "1", "--n", "6"]), "1 5 9 5 0 0 0\n");
}

#[test]
fn json_row_parses_back() {
    let text = stdout(&["row", "--t", "3", "--n", "500", "--format", "json"]);
    let parsed: RowJson = serde_json::from_str(&text).unwrap();
    let spec = TriangleSpec::new(3).unwrap();
    assert_eq!(parsed.parse_entries().unwrap(), row(spec, 500).unwrap().entries);
}

#[test]
fn triangles_match_golden_files() {
    assert_eq!(
        stdout(&["triangle", "--t", "4", "--rows", "10", "--format", "csv"]),
        include_str!("golden/triangle_t4.csv")
    );
    assert_eq!(
        stdout(&["triangle", "--t", "1", "--rows", "10", "--format", "csv"]),
        include_str!("golden/triangle_t1.csv")
    );
    assert_eq!(stdout(&["triangle", "--t", "7", "--rows", "1"]), "1\n");
}

#[test]
fn enumerate_listings() {
    let text = stdout(&["enumerate", "tableaux", "--t", "4", "--n", "7", "--k", "5"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 15);
    assert_eq!(lines[0], "1,2,3,5,7");
    assert_eq!(lines[13], "3,4,5,6,7");
    assert_eq!(lines[14], "count: 14");

    let text = stdout(&["enumerate", "paths", "--t", "4", "--n", "7", "--k", "5"]);
    assert_eq!(text.lines().count(), 15);
    assert!(text.starts_with("EEENENE\n"));
    assert!(text.ends_with("count: 14\n"));

    assert_eq!(stdout(&["enumerate", "paths", "--t", "1", "--n", "4", "--k", "3"]), "count: 0\n");
    // C(12, 6) - C(12, 4) = 429
    let text = stdout(&["enumerate", "paths", "--t", "2", "--n", "12", "--k", "6", "--limit", "1", "--format", "csv"]);
    assert_eq!(text.lines().last().unwrap(), "count,429");
    assert_eq!(text.lines().count(), 2);
}

#[test]
fn operator_output() {
    assert_eq!(
        stdout(&["operator", "--t", "3", "--N", "1"]),
        "x[3] - x[2] + x[1]\nd = [1, 1, 1]\n"
    );
    assert_eq!(stdout(&["operator", "--t", "1", "--N", "1"]), "x[1]\nd = [1]\n");
    let text = stdout(&["operator", "--t", "4", "--N", "3", "--format", "csv"]);
    assert_eq!(text.lines().nth(1).unwrap(), "1,3,6,10,14,14");
}

#[test]
fn oddcount_output() {
    assert_eq!(stdout(&["oddcount", "--t", "4", "--n", "9"]), "4\npredicted: 4\n");
    assert_eq!(stdout(&["oddcount", "--t", "3", "--n", "3"]), "3\n");
    assert_eq!(stdout(&["oddcount", "--t", "1", "--n", "0", "--method", "lucas"]), "1\npredicted: 1\n");
}

#[test]
fn bitmap_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t1.pbm");
    stdout(&["bitmap", "--t", "1", "--rows", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "P1\n2 2\n1 0\n1 0\n");
    assert_eq!(stdout(&["bitmap", "--t", "4", "--rows", "1"]), "P1\n1 1\n1\n");
}

#[test]
fn verify_small_ranges() {
    let text = stdout(&["verify", "--t-max", "1", "--n-max", "0"]);
    assert!(text.ends_with("all checks passed\n"));
    let text = stdout(&["verify", "--t-max", "4", "--n-max", "10", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["fail"] == 0));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["row", "--t", "0", "--n", "3"]), 2);
    assert_eq!(code(&["row", "--t", "2", "--n", "-1"]), 2);
    assert_eq!(code(&["row", "--t", "2"]), 2);
    assert_eq!(code(&["row", "--t", "2", "--n", "3", "--format", "pbm"]), 2);
    assert_eq!(code(&["enumerate", "paths", "--t", "1", "--n", "3", "--k", "5"]), 2);
    assert_eq!(code(&["enumerate", "paths", "--t", "1", "--n", "40", "--k", "20"]), 3);
    assert_eq!(code(&["oddcount", "--t", "3", "--n", "3", "--method", "lucas"]), 4);
    assert_eq!(code(&["bitmap", "--t", "1", "--rows", "2", "--out", "/nonexistent/dir/x.pbm"]), 5);
    assert_eq!(code(&["operator", "--t", "2", "--N", "0"]), 2);
}
