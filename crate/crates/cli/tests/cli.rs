use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trisquare"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn frac(v: &Value) -> String {
    format!("{}/{}", v["num"].as_str().unwrap(), v["den"].as_str().unwrap())
}

#[test]
fn polygon_json_lists_exact_vertices() {
    let out = run(&["polygon", "3", "--json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let verts: Vec<(String, String)> = v["vertices"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| (frac(&p["x"]), frac(&p["y"])))
        .collect();
    let want = [("0/1", "0/1"), ("1/3", "0/1"), ("1/1", "3/4"), ("0/1", "3/2")];
    assert_eq!(verts, want.map(|(a, b)| (a.to_string(), b.to_string())));
}

#[test]
fn svg_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    for path in [&a, &b] {
        assert!(run(&["polygon", "5", "--scaled", "--svg", path.to_str().unwrap()]).status.success());
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn moments_of_k4_from_json_and_edge_list() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("k4.json");
    fs::write(&json, r#"{"n":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}"#).unwrap();
    let list = dir.path().join("k4.txt");
    fs::write(&list, "# K4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
    for path in [&json, &list] {
        let out = run(&["moments", path.to_str().unwrap(), "--k", "4"]);
        assert!(out.status.success());
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.contains("m3 = 2/9"), "{text}");
        assert!(text.contains("m4 = 7/27"), "{text}");
    }
}

#[test]
fn verify_suites_pass() {
    let out = run(&["verify", "--r", "3", "--nmax", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("result: PASS"));

    let out = run(&["verify", "bollobas", "--vmax", "5", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["graphs_tested"], 1099);
    assert!(report["counterexample"].is_null());
}

#[test]
fn verify_writes_json_report_with_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&["--jobs", "2", "verify", "--r", "4", "--nmax", "7", "--report", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["graphs_tested"], 1 + 15 + 465);
}

#[test]
fn realize_worked_example() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let out = run(&["realize", "3", "1/2", "3/4", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["blueprint"]["total_order"], "120");
    assert_eq!(v["recount_matches"], true);
    let g: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(g["n"], 120);
    assert_eq!(g["edges"].as_array().unwrap().len(), 180);

    let out = run(&["realize", "3", "1/2", "3/4", "--blueprint-only"]);
    assert!(stdout_json(&out).get("recount").is_none());
}

#[test]
fn realize_outside_point_is_a_usage_error() {
    let out = run(&["realize", "3", "2", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("outside"));
}

#[test]
fn sample_csv_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    let args = |p: &str| {
        vec!["sample", "--r", "3", "--n", "40", "--count", "30", "--seed", "7", "--csv", p].into_iter().map(String::from).collect::<Vec<_>>()
    };
    let out = Command::new(env!("CARGO_BIN_EXE_trisquare")).args(args(a.to_str().unwrap())).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = Command::new(env!("CARGO_BIN_EXE_trisquare"))
        .arg("--jobs=3")
        .args(args(b.to_str().unwrap()))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    assert_eq!(text.lines().next().unwrap(), "index,d3_num,d3_den,d4_num,d4_den,classification");
    assert_eq!(text.lines().count(), 31);
}

#[test]
fn construct_reports_and_writes_graph() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    let out = run(&["construct", "3", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["order"], 10);
    let g: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(g["edges"].as_array().unwrap().len(), 15);

    let out = run(&["construct", "4", "--parts", "1,3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_json(&out)["graph"]["n"].as_u64().unwrap() > 0);
}

#[test]
fn limit_region_classifies_points() {
    let out = run(&["limit-region", "--point", "1/2", "1/4"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "boundary");
    let out = run(&["limit-region", "--point", "1/1000", "1/2000000"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "outside");
    let out = run(&["limit-region", "--json", "--cutoff", "4"]);
    assert_eq!(stdout_json(&out)["vertices"].as_array().unwrap().len(), 6);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["polygon", "2"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["moments", "/nonexistent/graph.json"]).status.code(), Some(2));
    assert_eq!(run(&["sample", "--r", "3", "--n", "7"]).status.code(), Some(2));
}
