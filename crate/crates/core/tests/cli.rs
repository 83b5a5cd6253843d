use std::path::Path;
use std::process::{Command, Output};

use hyperring::io;
use hyperring::ring::ordinary_zn;
use hyperring::HyperRing;
use serde_json::Value;

fn hyperring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperring"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_z4(dir: &Path) -> String {
    let path = dir.join("z4.json");
    let ring = HyperRing::validate(&ordinary_zn(4)).unwrap();
    io::save(&ring, None, &path).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn validate_accepts_z4() {
    let dir = tempfile::tempdir().unwrap();
    let out = hyperring(&["validate", &write_z4(dir.path())]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("Z4: valid hyperring of size 4"));
}

#[test]
fn empty_cell_exits_2_and_names_it() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(
        &path,
        r#"{"name":"broken","size":2,"add":[[0,1],[1,0]],"hmul":[[[0],[0]],[[0],[]]]}"#,
    )
    .unwrap();
    let out = hyperring(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("hmul[1][1]"), "{}", stderr(&out));
}

#[test]
fn axiom_failures_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    // 1 o 1 = {0} breaks the sign law and associativity with 1 o 0.
    std::fs::write(
        &path,
        r#"{"name":"bad","size":2,"add":[[0,1],[1,0]],"hmul":[[[0],[1]],[[1],[0]]]}"#,
    )
    .unwrap();
    let out = hyperring(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("axiom violations"), "{}", stderr(&out));
}

#[test]
fn missing_file_and_bad_usage_exit_2() {
    assert_eq!(hyperring(&["validate", "/nonexistent/ring.json"]).status.code(), Some(2));
    let out = hyperring(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("Usage"));
}

#[test]
fn classify_z4_lists_both_n_hyperideals() {
    let dir = tempfile::tempdir().unwrap();
    let out = hyperring(&["classify", &write_z4(dir.path())]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let n_ideals: Vec<Value> = report["ideals"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e["n_ideal"] == Value::Bool(true))
        .map(|e| e["members"].clone())
        .collect();
    assert_eq!(n_ideals, vec![serde_json::json!([0]), serde_json::json!([0, 2])]);
}

#[test]
fn classify_single_ideal() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_z4(dir.path());
    let out = hyperring(&["classify", &file, "--ideal", "0,2"]);
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["ideals"].as_array().unwrap().len(), 1);
    let out = hyperring(&["classify", &file, "--ideal", "0,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ideals_lists_the_lattice() {
    let dir = tempfile::tempdir().unwrap();
    let out = hyperring(&["ideals", &write_z4(dir.path())]);
    assert_eq!(stdout(&out), "{0}\n{0,2}\n{0,1,2,3}\n");
}

#[test]
fn theorems_run_filtered_default_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("verdicts.json");
    let out = hyperring(&["theorems", "run", "--only", "T18,T20", "--json", json.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let verdicts: Vec<Value> = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert!(!verdicts.is_empty());
    assert!(verdicts.iter().all(|v| v["theorem"] == "T18" || v["theorem"] == "T20"));
    assert!(stdout(&out).contains("T20"));
}

#[test]
fn theorems_run_reports_counterexamples_with_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z2.json");
    io::save(&HyperRing::validate(&ordinary_zn(2)).unwrap(), None, &path).unwrap();
    let out = hyperring(&["theorems", "run", "--ring", path.to_str().unwrap(), "--only", "T16"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("[FAIL] T16 on Z2"));
}

#[test]
fn theorems_run_rejects_unknown_ids_and_readings() {
    assert_eq!(hyperring(&["theorems", "run", "--only", "T99"]).status.code(), Some(2));
    assert_eq!(
        hyperring(&["theorems", "run", "--only", "T18", "--reading", "prime=sometimes"]).status.code(),
        Some(2)
    );
}

#[test]
fn theorems_list_has_every_entry() {
    let out = hyperring(&["theorems", "list"]);
    let text = stdout(&out);
    for e in hyperring::harness::registry() {
        assert!(text.contains(e.id));
    }
}

#[test]
fn generate_writes_files_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("spec.json");
    std::fs::write(&spec, r#"{"ordinary":[2,3,4],"a_sets":[],"total":[],"quotients":false,"product_cap":0,"matrix_cap":0}"#).unwrap();
    let out_dir = dir.path().join("corpus");
    let out = hyperring(&["generate", spec.to_str().unwrap(), "--out", out_dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let manifest: Vec<Value> =
        serde_json::from_str(&std::fs::read_to_string(out_dir.join("manifest.json")).unwrap()).unwrap();
    let names: Vec<&str> = manifest.iter().map(|m| m["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["Z2", "Z3", "Z4"]);
    assert!(manifest[0]["sha-256"].as_str().unwrap().len() == 64);
    let z4 = io::load_ring(&out_dir.join("Z4.json")).unwrap();
    assert_eq!(z4.size(), 4);
    assert!(out_dir.join("log.json").exists());
}

#[test]
fn construct_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let z4 = write_z4(dir.path());

    let q = dir.path().join("q.json");
    let out = hyperring(&["construct", "quotient", &z4, "--ideal", "0,2", "--out", q.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(io::load_ring(&q).unwrap().size(), 2);

    let out = hyperring(&["construct", "product", &z4, q.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let p = io::parse_definition(&stdout(&out)).unwrap().validate().unwrap();
    assert_eq!(p.size(), 8);

    let out = hyperring(&["construct", "matrix", q.to_str().unwrap(), "--dim", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let m = io::parse_definition(&stdout(&out)).unwrap().validate().unwrap();
    assert_eq!(m.size(), 16);

    let out = hyperring(&["construct", "gamma-star", &z4]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("\"size\": 4"));

    let out = hyperring(&["construct", "quotient", &z4, "--ideal", "0,1"]);
    assert_eq!(out.status.code(), Some(2));
}
