use std::process::{Command, Output};

use serde_json::Value;

fn braids(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braids"))
        .args(args)
        .env_remove("BRAID_MAX_ORBIT")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let out = braids(&all);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn d_poly_two_strands() {
    let out = braids(&["d-poly", "x1 x1", "--strands", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(serde_json::to_string(&v["result"]).unwrap(), r#"{"3":"-1/2","1":"3/2"}"#);
    assert_eq!(v["schema"], "1");
    assert_eq!(v["command"], "d-poly");
    assert_eq!(v["strands"], 2);
}

#[test]
fn nf_square_free() {
    let v = json(&["nf", "x3 x2 x1 x3 x2 x1"]);
    assert_eq!(v["result"]["square_free"], false);
    assert_eq!(v["input"], "x3 x2 x1 x3 x2 x1");
    let v = json(&["nf", "2.1.3.2.1.3"]);
    assert_eq!(v["result"]["square_free"], true);
    assert!(v["result"]["blocks"].is_object());
}

#[test]
fn dotted_input_is_echoed_expanded() {
    let v = json(&["nf", "3.2.1.3.2.1"]);
    assert_eq!(v["input"], "x3 x2 x1 x3 x2 x1");
    let v = json(&["nf", "x1^2 x2"]);
    assert_eq!(v["input"], "x1 x1 x2");
}

#[test]
fn conjugacy_type_of_one_cycle() {
    let v = json(&["conj-canon", "x2 x1 x3 x4", "--strands", "5"]);
    assert_eq!(v["result"]["A"], serde_json::json!([5]));
    assert_eq!(v["result"]["canonical_word"], "x1 x2 x3 x4");
}

#[test]
fn simple_reports_five_answers() {
    let v = json(&["simple", "x2 x1 x3 x4", "--strands", "5"]);
    for key in ["literally_simple", "conjugate_simple", "invariant_simple", "markov_simple", "geometrically_simple"] {
        assert_eq!(v["result"][key], true, "{key}");
    }
    let v = json(&["simple", "x1 x2 x1"]);
    for key in ["literally_simple", "conjugate_simple", "invariant_simple", "markov_simple", "geometrically_simple"] {
        assert_eq!(v["result"][key], false, "{key}");
    }
}

#[test]
fn orbit_and_witness() {
    let v = json(&["orbit", "x1 x2 x1"]);
    assert_eq!(v["result"]["all_square_free"], false);
    assert!(v["result"]["witness"]["witness"].is_string());
    let v = json(&["orbit", "x1 x2"]);
    assert_eq!(v["result"]["size"], 2);
    assert_eq!(v["result"]["all_square_free"], true);
}

#[test]
fn markov_trace_ends_at_components() {
    let v = json(&["markov-reduce", "x1 x2 x4"]);
    assert_eq!(v["result"]["final_strands"], 2);
    assert!(v["result"]["moves"].as_array().is_some_and(|m| !m.is_empty()));
}

#[test]
fn closure_linking() {
    let v = json(&["closure", "x1 x1 x3"]);
    assert_eq!(v["result"]["component_count"], 3);
    assert_eq!(v["result"]["linking_matrix"][0][1], "1");
}

#[test]
fn cycles_output() {
    let v = json(&["cycles", "x2 x1 x3 x4"]);
    assert_eq!(v["result"]["decomposition"], "[D(2,1) U(3,4)]");
}

#[test]
fn exit_codes() {
    assert_eq!(braids(&["nf", "x0"]).status.code(), Some(2));
    assert_eq!(braids(&["nf", "x1 y2"]).status.code(), Some(2));
    assert_eq!(braids(&["nf", "x3", "--strands", "2"]).status.code(), Some(2));
    assert_eq!(braids(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(braids(&["verify", "--max-strands", "7"]).status.code(), Some(2));
    assert_eq!(braids(&["markov-reduce", "x1 x1"]).status.code(), Some(1));
}

#[test]
fn bound_exceeded_is_partial() {
    let out = braids(&["orbit", "x1 x2 x1 x3 x2 x1", "--max-orbit", "3", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["partial"], true);
    assert_eq!(v["result"]["complete"], false);
}

#[test]
fn env_override_for_orbit_bound() {
    let out = Command::new(env!("CARGO_BIN_EXE_braids"))
        .args(["orbit", "x1 x2 x1 x3 x2 x1", "--json"])
        .env("BRAID_MAX_ORBIT", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn runs_are_byte_identical() {
    for args in [
        &["orbit", "x1 x2 x1 x3", "--json"][..],
        &["d-poly", "x1 x2 x2 x1 x2", "--json"],
        &["markov-reduce", "x2 x1 x3 x5 x6"],
        &["verify", "--max-strands", "3"],
    ] {
        let a = braids(args);
        let b = braids(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn verify_table() {
    let out = braids(&["verify", "--max-strands", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("[PASS]")).count(), 10);
    assert!(text.contains("1, 2, 6"));
    let v = json(&["verify", "--max-strands", "4"]);
    assert_eq!(v["result"]["failed"], 0);
}

#[test]
fn timing_only_on_request() {
    let v = json(&["nf", "x1"]);
    assert!(v.get("elapsed_ms").is_none());
    let v = json(&["nf", "x1", "--timing"]);
    assert!(v["elapsed_ms"].is_u64());
}
