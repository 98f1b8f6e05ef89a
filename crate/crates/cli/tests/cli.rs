use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn sigspread(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sigspread"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(out);
    assert!(text.ends_with('\n'));
    serde_json::from_str(&text).unwrap()
}

#[test]
fn generate_then_solve_gn6() {
    let graph = sigspread(&["generate", "gn", "6"], "");
    let g = json(&graph);
    assert_eq!(g["schema"], 1);
    assert_eq!(g["n"], 6);
    let report = json(&sigspread(&["solve", "--exact"], &stdout(&graph)));
    assert_eq!(report["optimum"], 1);
    assert_eq!(report["optimal"], true);
    assert_eq!(report["schema"], 1);
}

#[test]
fn simulate_c5_all_negative() {
    let graph = stdout(&sigspread(&["generate", "cycle", "5", "--all-negative"], ""));
    let trace = json(&sigspread(&["simulate", "--place", "0:A", "--place", "2:A"], &graph));
    assert_eq!(trace["confused"], serde_json::json!([3]));
    assert_eq!(trace["complete"], true);
    assert_eq!(trace["mode"], "ID");
}

#[test]
fn empty_input_is_a_usage_error() {
    let out = sigspread(&["solve"], "");
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(sigspread(&["solve", "--frobnicate"], "").status.code(), Some(2));
    assert_eq!(sigspread(&["verify", "--claim", "nope"], "").status.code(), Some(2));
}

#[test]
fn domain_errors_exit_one() {
    let out = sigspread(&["generate", "gn", "7"], "");
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("even n >= 6"));
    let dup = r#"{"n":2,"edges":[{"u":0,"v":1,"sign":1},{"u":1,"v":0,"sign":-1}]}"#;
    assert_eq!(sigspread(&["balance"], dup).status.code(), Some(1));
    let g = stdout(&sigspread(&["generate", "path", "2"], ""));
    let out = sigspread(&["simulate", "--place", "0:A", "--place", "1:A"], &g);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn relaxed_solve_and_via_class_agree() {
    let graph = stdout(&sigspread(&["generate", "random-connected", "7", "--seed", "11"], ""));
    let a = json(&sigspread(&["solve", "--relaxed"], &graph));
    let b = json(&sigspread(&["solve", "--via-class"], &graph));
    assert_eq!(a["optimum"], b["optimum"]);
    assert_eq!(a["mode"], "rID");
}

#[test]
fn min_steps_and_greedy() {
    let graph = stdout(&sigspread(&["generate", "path", "7"], ""));
    let steps = json(&sigspread(&["solve", "--min-steps"], &graph));
    assert_eq!(steps["steps"], 2);
    let greedy = json(&sigspread(&["solve", "--greedy", "tree-frontier"], &graph));
    assert_eq!(greedy["confused"], 0);
    assert_eq!(greedy["guarantee"], "confused = 0");
}

#[test]
fn generated_graphs_round_trip_through_switch() {
    let graph = stdout(&sigspread(&["generate", "gn", "6"], ""));
    let switched = json(&sigspread(&["switch", "--set", "0,1,2"], &graph));
    let edges = switched["edges"].as_array().unwrap();
    assert!(edges.iter().all(|e| e["sign"] == 1));
    let twice = stdout(&sigspread(&["switch", "--set", "0,1,2"], &switched.to_string()));
    assert_eq!(twice, graph);
}

#[test]
fn balance_frustration_and_equivalence() {
    let graph = stdout(&sigspread(&["generate", "gn", "6"], ""));
    let b = json(&sigspread(&["balance"], &graph));
    assert_eq!(b["balanced"], true);
    assert_eq!(b["partition"]["u1"], serde_json::json!([0, 1, 2]));
    let ktt = stdout(&sigspread(&["generate", "ktt", "4"], ""));
    assert_eq!(json(&sigspread(&["frustration"], &ktt))["value"], 4);

    let dir = std::env::temp_dir().join(format!("sigspread-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("a.json");
    let c = dir.join("c.json");
    std::fs::write(&a, &graph).unwrap();
    std::fs::write(&c, stdout(&sigspread(&["switch", "--set", "3"], &graph))).unwrap();
    let eq = json(&sigspread(&["equivalent", a.to_str().unwrap(), c.to_str().unwrap()], ""));
    assert_eq!(eq["equivalent"], true);
    assert_eq!(eq["switch"], serde_json::json!([3]));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn dot_output_marks_negative_edges() {
    let out = sigspread(&["generate", "ktt", "3", "--format", "dot"], "");
    let dot = stdout(&out);
    assert!(dot.starts_with("graph G {"));
    assert_eq!(dot.matches("style=dashed").count(), 3);
    let graph = stdout(&sigspread(&["generate", "cycle", "5", "--all-negative"], ""));
    let dot = stdout(&sigspread(&["simulate", "--place", "0:A", "--place", "2:A", "--format", "dot"], &graph));
    assert_eq!(dot.matches("style=filled").count(), 1);
}

#[test]
fn verify_single_claim_json() {
    let out = json(&sigspread(&["verify", "--claim", "gn_confusion", "--n", "6", "--json"], ""));
    let results = out.as_array().unwrap();
    assert_eq!(results.len(), 1);
    assert_eq!(results[0]["status"], "pass");
}

#[test]
fn explore_reports_violations_with_status_three() {
    // K_33 with a negative matching has C = 1 above ceil(3*6/5 - 4) = 0
    let out = sigspread(
        &["explore-conjecture", "conj1", "--family-max-n", "6", "--random-count", "0"],
        "",
    );
    assert_eq!(out.status.code(), Some(3));
    let report = json(&Output { status: std::process::ExitStatus::default(), ..out });
    assert!(!report["report"]["violations"].as_array().unwrap().is_empty());
}
