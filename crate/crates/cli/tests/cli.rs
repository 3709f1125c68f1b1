use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lefschetz")).args(args).output().unwrap()
}

fn run_json(args: &[&str]) -> (Value, i32) {
    let out = run(args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    (v, out.status.code().unwrap())
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn collect_strings(v: &Value, out: &mut Vec<String>) {
    match v {
        Value::String(s) => out.push(s.clone()),
        Value::Array(a) => a.iter().for_each(|x| collect_strings(x, out)),
        Value::Object(o) => o.values().for_each(|x| collect_strings(x, out)),
        _ => {}
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

#[test]
fn a2_minimal_orbit_report() {
    let (v, code) = run_json(&["orbit", "--type", "A2", "--h0", "1,0", "--h", "1,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["k"], "3");
    assert_eq!(v["h0"], json!(["2/3", "1/3"]));
    assert_eq!(v["critical_values"], json!(["-1/1", "0/1", "1/1"]));
    assert_eq!(v["fiber_betti"], json!([1, 0, 1, 2, 0]));
    assert_eq!(v["theta"]["simple_roots"], json!([2]));
}

#[test]
fn rationals_are_reduced_p_over_q() {
    let (v, _) = run_json(&["orbit", "--type", "G2", "--h0", "1/2,-4/6", "--h", "3,1/5"]);
    let mut strings = Vec::new();
    collect_strings(&v["critical_points"], &mut strings);
    collect_strings(&v["critical_values"], &mut strings);
    assert!(!strings.is_empty());
    for s in strings {
        let (p, q) = s.split_once('/').unwrap_or_else(|| panic!("{s}"));
        let (p, q): (i64, i64) = (p.parse().unwrap(), q.parse().unwrap());
        assert!(q > 0 && gcd(p, q) == 1, "{s}");
    }
}

#[test]
fn simple_root_basis() {
    let (v, code) = run_json(&["orbit", "--type", "A1", "--basis", "simple-root", "--h0", "1", "--h", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["critical_values"], json!(["-2/1", "2/1"]));
    assert_eq!(v["critical_points"], json!([["-1/1"], ["1/1"]]));
}

#[test]
fn point_orbit_is_input_error() {
    let out = run(&["orbit", "--type", "A1", "--h0", "0", "--h", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("orbit is a point"));
}

#[test]
fn parse_error_names_token() {
    let out = run(&["orbit", "--type", "A2", "--h0", "1,abc", "--h", "1,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("\"abc\""), "{}", stderr(&out));
    let out = run(&["orbit", "--type", "Z9", "--h0", "1", "--h", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("Z9"));
}

#[test]
fn degenerate_input_prints_partial_report() {
    let (v, code) = run_json(&["orbit", "--type", "A2", "--h0", "1,1", "--h", "1,0"]);
    assert_eq!(code, 4);
    assert_eq!(v["status"], "degenerate");
    assert_eq!(v["h_regular"], false);
    assert!(v["h_vanishing_root"].is_array());
}

#[test]
fn cap_exceeded_exit_code_and_env_var() {
    let (v, code) = run_json(&["orbit", "--type", "A3", "--h0", "1,1,1", "--h", "1,2,3", "--cap", "10"]);
    assert_eq!(code, 3);
    assert_eq!(v["k"], "24");
    assert_eq!(v["status"], "size_only");
    assert_eq!(v["middle_betti"], 23);

    let out = Command::new(env!("CARGO_BIN_EXE_lefschetz"))
        .args(["orbit", "--type", "A3", "--h0", "1,1,1", "--h", "1,2,3"])
        .env("LEFSCHETZ_ORBIT_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));

    let out = run(&["diamond", "flag", "--type", "A3", "--cap", "5"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("orbit_index = 24"));
}

#[test]
fn diamond_flag_and_reflect_twice() {
    let (v, code) = run_json(&["diamond", "flag", "--type", "A2", "--theta", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v, json!({"n": 2, "h": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]}));

    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().join("d.json");
    let r1 = dir.path().join("r1.json");
    let r2 = dir.path().join("r2.json");
    let (d, r1, r2) = (d.to_str().unwrap(), r1.to_str().unwrap(), r2.to_str().unwrap());
    assert!(run(&["diamond", "flag", "--type", "B3", "--theta", "1", "--out", d]).status.success());
    assert!(run(&["diamond", "reflect", "--input", d, "--out", r1]).status.success());
    assert!(run(&["diamond", "reflect", "--input", r1, "--out", r2]).status.success());
    assert_eq!(std::fs::read(d).unwrap(), std::fs::read(r2).unwrap());
    assert_ne!(std::fs::read(d).unwrap(), std::fs::read(r1).unwrap());
}

#[test]
fn diamond_text_pyramid() {
    let out = run(&["diamond", "flag", "--type", "A2", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 7);
    assert_eq!(text.lines().next().unwrap().trim(), "1");
}

#[test]
fn diamond_check_rejects_malformed_input() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"n": 2, "h": [[1]]}"#).unwrap();
    let out = run(&["diamond", "check", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fukaya_commands() {
    let (lg2, _) = run_json(&["fukaya", "lg2"]);
    let (from_orbit, code) =
        run_json(&["fukaya", "from-orbit", "--type", "A1", "--h0", "1", "--h", "1", "--hom", "0,1:0:1,1:1"]);
    assert_eq!(code, 0);
    assert_eq!(lg2["hom_ranks"], from_orbit["hom_ranks"]);
    assert_eq!(lg2["products_all_vanish_except_identity"], from_orbit["products_all_vanish_except_identity"]);
    assert_eq!(from_orbit["objects"][0]["critical_value"], "-1/2");

    let out = run(&["fukaya", "from-orbit", "--type", "A2", "--h0", "1,0", "--h", "0,0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("resolve collisions"));

    let out = run(&["fukaya", "from-orbit", "--type", "A1", "--h0", "1", "--h", "1", "--hom", "1,0:0:1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn mirror_commands() {
    let (v, _) = run_json(&["mirror", "fiber", "--level", "0"]);
    assert_eq!(v["components"].as_array().unwrap().len(), 3);
    assert_eq!(v["nodes"].as_array().unwrap().len(), 2);
    assert_eq!(v["nodes"][0]["x"]["minimal_polynomial"], "x^2 + x + 1");

    let (v, _) = run_json(&["mirror", "fiber", "--level", "1"]);
    assert_eq!(v["components"].as_array().unwrap().len(), 1);
    assert_eq!(v["level"], json!({"re": "1/1", "im": "0/1"}));

    let (v, _) = run_json(&["mirror", "critical-levels"]);
    assert_eq!(v, json!([{"re": "0/1", "im": "0/1"}]));

    let (v, _) = run_json(&["mirror", "consistency"]);
    assert_eq!(v["equivalence_claimed"], false);
    let value = |q: &str| v["rows"].as_array().unwrap().iter().find(|r| r["quantity"] == q).unwrap()["value"].clone();
    assert_eq!(value("thimbles"), 2);
    assert_eq!(value("nodes_of_critical_fiber"), 2);
    assert_eq!(value("critical_levels_of_g"), 1);
    assert_eq!(value("critical_values_of_f_H"), 2);

    let out = run(&["mirror", "consistency", "--format", "text"]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("no equivalence"));
}
