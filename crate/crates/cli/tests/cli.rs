//! End-to-end tests against the built binary: exit codes, report shapes,
//! table formats, and the census bound override.

use std::path::Path;
use std::process::{Command, Output};

fn dsing(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dsing"))
        .args(args)
        .env_remove("DS_MAX_N")
        .output()
        .expect("binary runs")
}

fn dsing_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dsing"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

#[test]
fn check_singular_graph_exits_10() {
    let out = dsing(&["check", "cyclic", "4", "1,3"]);
    assert_eq!(out.status.code(), Some(10), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("verdict: singular"), "{text}");
    assert!(text.contains("dividing cyclotomic indices: 4"), "{text}");
}

#[test]
fn check_nonsingular_graph_exits_0() {
    let out = dsing(&["check", "cyclic", "5", "1,4"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("verdict: nonsingular"));
}

#[test]
fn check_dihedral_octahedron() {
    let out = dsing(&["check", "dihedral", "3", "r:1,2;f:0,1", "--oracle"]);
    assert_eq!(out.status.code(), Some(10));
    let text = stdout(&out);
    assert!(text.contains("verdict: singular"), "{text}");
    assert!(text.contains("block nullity"), "{text}");
    assert!(text.contains("agreement: yes"), "{text}");
}

#[test]
fn check_json_report_parses_and_agrees() {
    let out = dsing(&["check", "dihedral", "3", "f:0,1", "--oracle", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["groupKind"], "dihedral");
    assert_eq!(report["verdict"], "nonsingular");
    assert_eq!(report["oracleDeterminant"], "-4");
    assert_eq!(report["agreement"], true);
}

#[test]
fn check_rejects_bad_sets_with_data_exit_code() {
    let out = dsing(&["check", "cyclic", "4", "1"]);
    assert_eq!(out.status.code(), Some(65));
    assert!(stderr(&out).contains("not symmetric"), "{}", stderr(&out));

    let out = dsing(&["check", "cyclic", "4", "0"]);
    assert_eq!(out.status.code(), Some(65));
    assert!(stderr(&out).contains("identity"), "{}", stderr(&out));

    let out = dsing(&["check", "cyclic", "4", "2"]);
    assert_eq!(out.status.code(), Some(65));
    assert!(stderr(&out).contains("generate"), "{}", stderr(&out));
}

#[test]
fn allow_nongenerating_admits_subgroup_sets() {
    let out = dsing(&["check", "cyclic", "4", "2", "--allow-nongenerating"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("(non-generating)"));
}

#[test]
fn usage_errors_exit_64() {
    let out = dsing(&["check", "hexagonal", "4", "1,3"]);
    assert_eq!(out.status.code(), Some(64));
    let out = dsing(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn census_csv_has_frozen_columns() {
    let out = dsing(&["census", "cyclic", "4"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let table = stdout(&out);
    let mut lines = table.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,groupKind,set,isGenerating,edgeCount,verdict,dividingD"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[0], "4,cyclic,,false,0,singular,1 2 4");
    assert_eq!(rows[1], "4,cyclic,\"1,3\",true,4,singular,4");
    assert!(stderr(&out).contains("total 4 subsets, 2 singular"));
}

#[test]
fn census_json_rows_round_trip() {
    let out = dsing(&["census", "dihedral", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let rows: Vec<serde_json::Value> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rows.len(), 16);
    assert_eq!(rows[0]["edgeCount"], 0);
    assert_eq!(rows[0]["verdict"], "singular");
}

#[test]
fn census_writes_table_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("census.csv");
    let out = dsing(&["census", "cyclic", "6", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("total 8 subsets, 4 singular"));
    let table = std::fs::read_to_string(&path).unwrap();
    assert_eq!(table.lines().count(), 9); // header + 8 rows
}

#[test]
fn census_bound_refusal_and_overrides() {
    let out = dsing(&["census", "cyclic", "30"]);
    assert_eq!(out.status.code(), Some(64));
    assert!(stderr(&out).contains("bound"), "{}", stderr(&out));

    let out = dsing(&["census", "cyclic", "26", "--max-n", "26"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));

    let out = dsing_with_env(&["census", "cyclic", "26"], "DS_MAX_N", "26");
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
}

#[test]
fn verify_sweeps_agree() {
    let out = dsing(&["verify", "cyclic", "8", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("all 42 subsets agree"), "{}", stdout(&out));

    let out = dsing(&["verify", "dihedral", "4", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let summary: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(summary["subsetsChecked"], 80);
    assert_eq!(summary["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn spectrum_cyclic_four_cycle() {
    let out = dsing(&["spectrum", "cyclic", "4", "1,3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("characteristic polynomial: -4x^2 + x^4"), "{text}");
    assert!(text.contains("2.0000"), "{text}");
}

#[test]
fn spectrum_dihedral_six_cycle() {
    let out = dsing(&["spectrum", "dihedral", "3", "f:0,1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("char(M + N)"), "{text}");
    assert!(
        text.contains("product = char(A): -4 + 9x^2 - 6x^4 + x^6"),
        "{text}"
    );
}

#[test]
fn spectrum_eight_cycle_reports_zero_constant_term() {
    let out = dsing(&["spectrum", "cyclic", "8", "1,7", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let coeffs = report["charPoly"].as_array().unwrap();
    assert_eq!(coeffs[0], "0"); // constant term vanishes: the 8-cycle is singular
}

#[test]
fn help_exits_zero() {
    let out = dsing(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("census"));
    let _ = Path::new("unused");
}
