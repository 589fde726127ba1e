use std::path::PathBuf;
use std::process::Command;

use rees::cli::run;
use serde_json::Value;

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn report(args: &[&str]) -> Value {
    let argv: Vec<String> = std::iter::once("rees").chain(args.iter().copied()).map(String::from).collect();
    let out = run(argv);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    serde_json::from_str(&out.stdout).expect("the report is JSON")
}

#[test]
fn normality_of_the_square() {
    let r = report(&["normality", &data("c4.txt")]);
    assert_eq!(r["command"], "normality");
    assert_eq!(r["results"]["normal"], true);
    assert_eq!(r["results"]["method"], "both");
    assert_eq!(r["partial"], false);
    assert!(r["error"].is_null());
    assert!(r["budgets"]["points"]["used"].as_u64().unwrap() > 0);
}

#[test]
fn triangle_resurgence() {
    let r = report(&["resurgence", &data("c3.txt")]);
    assert_eq!(r["results"]["rho_ic"], "4/3");
    assert_eq!(r["results"]["ceiling"], 2);
}

#[test]
fn q6_containment_table() {
    let r = report(&["containment", &data("q6.txt"), "--r", "1..6"]);
    let table: Vec<(u64, u64)> = r["results"]["table"]
        .as_array()
        .unwrap()
        .iter()
        .map(|row| (row["r"].as_u64().unwrap(), row["f"].as_u64().unwrap()))
        .collect();
    assert_eq!(table, vec![(1, 1), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)]);
    assert_eq!(r["results"]["resurgence_one"], true);
}

#[test]
fn graph_and_code_commands() {
    let g = report(&["graph-analyze", &data("two_triangles.txt")]);
    assert_eq!(g["results"]["edge_ideal_normal"], false);
    assert_eq!(g["results"]["bipartite"], false);
    let c = report(&["code-weights", &data("p2_f2.txt")]);
    assert_eq!(c["results"]["length"], 7);
    assert_eq!(c["results"]["v_number"], 3);
    let v = report(&["vnumber", "--points", &data("p2_f2.txt")]);
    assert_eq!(v["results"]["v_number"], 3);
    assert_eq!(report(&["mfull", &data("mfull.txt")])["results"]["m_full"], true);
    assert_eq!(report(&["cremona", &data("cremona.txt")])["results"]["cremona"], true);
    assert_eq!(report(&["invariants", &data("multiplicity.txt")])["results"]["multiplicity"], "20");
}

#[test]
fn embedded_input_round_trips() {
    let r = report(&["normality", &data("c4.txt")]);
    let text = r["input"]["text"].as_str().unwrap();
    let reparsed = rees::io::parse_ideal(text).unwrap();
    let original = rees::io::parse_ideal(&std::fs::read_to_string(data("c4.txt")).unwrap()).unwrap();
    assert_eq!(reparsed, original);
}

#[test]
fn reports_are_deterministic() {
    let args = ["rees", "symbolic", &data("c3.txt")];
    let a = run(args);
    let b = run(args);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn parse_errors_exit_two_without_a_report() {
    let dir = std::env::temp_dir().join(format!("rees-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "1 1\n1 q\n").unwrap();
    let out = run(["rees", "normality", bad.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.contains("line 2, column 3"), "{}", out.stderr);
    assert_eq!(run(["rees", "normality", "/nonexistent/input"]).code, 2);
    assert_eq!(run(["rees", "no-such-command"]).code, 2);
}

#[test]
fn exhausted_budget_exits_three_with_a_partial_report() {
    let out = run(["rees", "normality", &data("c4.txt"), "--budget-points", "3"]);
    assert_eq!(out.code, 3);
    let r: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(r["partial"], true);
    assert!(!r["error"].is_null());
}

#[test]
fn binary_writes_the_report_to_out() {
    let path: PathBuf = std::env::temp_dir().join(format!("rees-report-{}.json", std::process::id()));
    let status = Command::new(env!("CARGO_BIN_EXE_rees"))
        .args(["resurgence", &data("c3.txt"), "--out", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(status.status.success());
    assert!(!status.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r["results"]["rho_ic"], "4/3");
    std::fs::remove_file(path).ok();
}
