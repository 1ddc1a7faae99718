use std::process::{Command, Output};

use serde_json::Value;

fn leinster(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leinster"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn full_run_on_dual_numbers_passes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = leinster(&[
        "verify",
        "all",
        "--catalog",
        "dual0",
        "--max-weight",
        "5",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["status"], "pass");
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["suites"].as_array().unwrap().len(), 12);
    assert_eq!(report["failed"], 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("pass:"));
}

#[test]
fn standard_signs_break_leibniz_with_a_witness() {
    let out = leinster(&[
        "verify",
        "em-leibniz",
        "--catalog",
        "ext1",
        "--max-weight",
        "5",
        "--negative-control",
        "standard-signs",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    assert_eq!(report["status"], "fail");
    let check = &report["suites"][0]["reports"][0];
    assert_eq!(check["name"], "em.leibniz");
    assert_eq!(check["status"], "fail");
    assert!(!check["witness"].as_str().unwrap().is_empty());
}

#[test]
fn other_negative_controls_fail() {
    for (suite, control, input) in [
        ("bar", "shifted-faces", "ext1"),
        ("monoid", "drop-degeneracy", "k"),
        ("a-infinity", "broken-leibniz", "k"),
    ] {
        let out = leinster(&["verify", suite, "--catalog", input, "--negative-control", control]);
        assert_eq!(out.status.code(), Some(1), "{suite} with {control}");
    }
}

#[test]
fn cone_has_no_cobar_bar_homology() {
    let out = leinster(&["homology", "--catalog", "cone", "--complex", "cobar-bar", "--max-weight", "5", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let dims = json(&out)["dims"].as_object().unwrap().clone();
    assert!(!dims.is_empty());
    assert!(dims.values().all(|v| v == 0), "{dims:?}");
    let table = leinster(&["homology", "--catalog", "cone", "--complex", "cobar-bar", "--max-weight", "5"]);
    assert!(String::from_utf8_lossy(&table.stdout).starts_with("degree"));
}

#[test]
fn homology_of_exterior_algebra() {
    let out = leinster(&["homology", "--catalog", "ext1", "--json"]);
    let h = json(&out);
    assert_eq!(h["dims"]["0"], 1);
    assert_eq!(h["dims"]["1"], 1);
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(leinster(&["verify", "all", "--catalog", "nope"]).status.code(), Some(2));
    assert_eq!(leinster(&["verify", "all", "--catalog", "k", "--max-weight", "9"]).status.code(), Some(2));
    assert_eq!(leinster(&["verify", "all", "--input", "/nonexistent.json"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"basis\": 3}").unwrap();
    assert_eq!(leinster(&["verify", "bar", "--input", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(leinster(&["verify", "bogus", "--catalog", "k"]).status.code(), Some(2));
}

#[test]
fn json_algebra_input_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dual.json");
    let doc = serde_json::json!({
        "schema_version": 1,
        "name": "dual-from-file",
        "basis": [{"label": "1", "degree": 0}, {"label": "x", "degree": 0}],
        "unit": "1",
        "product": [],
    });
    std::fs::write(&path, doc.to_string()).unwrap();
    let out = leinster(&["verify", "bar", "counit", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["input"], "dual-from-file");
}

#[test]
fn monoid_input_marks_algebra_suites_undecided() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("point.json");
    let cells = |n: usize| serde_json::json!([{"label": format!("p{n}"), "multidegree": vec![0; n]}]);
    let doc = serde_json::json!({
        "schema_version": 1,
        "components": [cells(0), cells(1), cells(2)],
    });
    std::fs::write(&path, doc.to_string()).unwrap();
    let out = leinster(&["verify", "contraction", "--input", path.to_str().unwrap(), "--max-weight", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    assert_eq!(report["status"], "undecided");
    assert_eq!(report["suites"][0]["status"], "undecided");
}

#[test]
fn reports_are_deterministic() {
    let args = ["verify", "bar", "em", "a-infinity", "--catalog", "ext1"];
    let first = leinster(&args).stdout;
    let mut with_jobs = args.to_vec();
    with_jobs.extend(["--jobs", "2"]);
    assert_eq!(first, leinster(&args).stdout);
    assert_eq!(first, leinster(&with_jobs).stdout);
}

#[test]
fn catalog_and_schemas_are_json() {
    let entries = json(&leinster(&["catalog"]));
    let names: Vec<_> = entries.as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    for n in ["k", "dual0", "ext1", "cone", "poly3"] {
        assert!(names.contains(&n));
    }
    for kind in ["algebra", "monoid", "report"] {
        let s = json(&leinster(&["schema", kind]));
        assert!(s["$schema"].is_string());
    }
}
