use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use weakstar::formats;
use weakstar_core::canon::canonical_key_graph;
use weakstar_core::counterexamples::build_gadget_h;
use weakstar_core::graph::families;
use weakstar_core::Graph;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn fx(name: &str) -> String {
    fixture(name).display().to_string()
}

/// Runs the binary; returns exit code and parsed stdout report.
fn run(args: &[&str], env: &[(&str, &str)]) -> (i32, Value) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_weakstar"));
    cmd.args(args).env_remove("WEAKSTAR_BUDGET");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    let report = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().expect("exit code"), report)
}

fn code(args: &[&str]) -> i32 {
    run(args, &[]).0
}

fn same_graph(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.m() == b.m() && canonical_key_graph(a, &vec![0; a.n()]) == canonical_key_graph(b, &vec![0; b.n()])
}

#[test]
fn fixtures_match_builders() {
    let load = |n: &str| formats::load_graph(&fx(n)).unwrap();
    assert!(same_graph(&load("k3.g6"), &families::complete(3)));
    assert!(same_graph(&load("k4.g6"), &families::complete(4)));
    assert!(same_graph(&load("c4.g6"), &families::cycle(4)));
    assert!(same_graph(&load("w20.g6"), &families::wheel(20)));
    assert!(same_graph(&load("octahedron.json"), &weakstar::corpus::octahedron()));

    let h = build_gadget_h().unwrap();
    let g = load("h.json");
    assert_eq!(g, h.graph);
    let lists = formats::lists_from_json(&g, &formats::read_text(&fixture("h-lists.json")).unwrap()).unwrap();
    assert_eq!(lists, h.lists);
}

#[test]
fn decide_examples() {
    let c4 = fx("c4.g6");
    let k3 = fx("k3.g6");
    assert_eq!(code(&["decide", "--graph", &c4, "--caps", "const:2", "--param", "at"]), 0);
    assert_eq!(code(&["decide", "--graph", &k3, "--caps", "const:2", "--param", "weakstar"]), 1);
    assert_eq!(code(&["decide", "--graph", "empty", "--caps", "const:1", "--param", "weakstar"]), 0);
    assert_eq!(code(&["decide", "--graph", &c4, "--caps", "const:2", "--param", "choosable"]), 0);
    assert_eq!(code(&["decide", "--graph", &c4, "--caps", "const:2", "--param", "dp"]), 1);
    assert_eq!(code(&["decide", "--graph", &c4, "--caps", "const:3", "--param", "dppaint"]), 0);
    assert_eq!(code(&["decide", "--graph", &c4, "--caps", "const:2", "--param", "weakstar"]), 1);
    assert_eq!(code(&["decide", "--graph", &k3, "--caps", "const:3", "--param", "strict"]), 0);
    assert_eq!(code(&["decide", "--graph", &k3, "--caps", "const:2", "--param", "paint"]), 1);
    assert_eq!(code(&["decide", "--graph", "corpus:K4", "--caps", "deg", "--param", "strictweak"]), 1);
}

#[test]
fn witnesses_are_reported() {
    let (c, r) = run(&["decide", "--graph", "corpus:K3", "--caps", "const:2", "--param", "choosable"], &[]);
    assert_eq!(c, 1);
    assert_eq!(r["outcome"], "no");
    let lists = r["details"]["witness"]["lists"].as_object().unwrap();
    assert_eq!(lists.len(), 3);
    assert!(lists.values().all(|l| l.as_array().unwrap().len() == 2));

    let (c, r) = run(&["decide", "--graph", "corpus:C5", "--caps", "const:3", "--param", "weakstar"], &[]);
    assert_eq!(c, 0);
    assert!(!r["details"]["certificate"].as_array().unwrap().is_empty());
}

#[test]
fn certificate_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("w.jsonl");
    let cert_s = cert.display().to_string();
    let g = "corpus:W5";
    assert_eq!(code(&["decide", "--graph", g, "--caps", "const:4", "--param", "weakstar", "--out", &cert_s]), 0);
    assert_eq!(code(&["verify", "--graph", g, "--caps", "const:4", "--cert", &cert_s]), 0);
    let (c, r) = run(&["verify", "--graph", g, "--caps", "const:3", "--cert", &cert_s], &[]);
    assert_eq!(c, 1);
    assert!(r["details"]["step"].as_u64().is_some());
    assert_eq!(r["details"]["header_caps_differ"], true);
    let text = std::fs::read_to_string(&cert).unwrap();
    let head: Vec<&str> = text.lines().take(3).collect();
    let part = dir.path().join("part.jsonl");
    std::fs::write(&part, head.join("\n")).unwrap();
    let part_s = part.display().to_string();
    assert_eq!(code(&["verify", "--graph", g, "--caps", "const:4", "--cert", &part_s, "--prefix"]), 0);
    assert_eq!(code(&["verify", "--graph", g, "--caps", "const:4", "--cert", &part_s]), 1);
    // same graph, different labelling of the header
    assert_eq!(code(&["verify", "--graph", "corpus:W6", "--caps", "const:3", "--cert", &cert_s]), 3);
}

#[test]
fn input_errors_exit_3() {
    assert_eq!(code(&["decide", "--graph", "corpus:nonsense", "--caps", "deg", "--param", "at"]), 3);
    assert_eq!(code(&["decide", "--graph", "/no/such/file", "--caps", "deg", "--param", "at"]), 3);
    assert_eq!(code(&["decide", "--graph", "corpus:K3", "--caps", "trunc:x", "--param", "at"]), 3);
    assert_eq!(code(&["planar-cert", "--graph", &fx("w20.g6"), "--k", "10"]), 3);
    assert_eq!(code(&["planar-cert", "--graph", &fx("k4.g6")]), 3);
    assert_eq!(code(&["planar-cert", "--graph", "corpus:K5"]), 3);
    assert_eq!(code(&["general-cert", "--graph", &fx("k4.g6"), "--s", "3", "--t", "3"]), 3);
    let (c, r) = run(&["decide", "--graph", "corpus:K3", "--caps", "deg", "--param", "weakstar"], &[("WEAKSTAR_BUDGET", "x")]);
    assert_eq!(c, 3);
    assert!(r["error"].as_str().unwrap().contains("WEAKSTAR_BUDGET"));
}

#[test]
fn exhausted_budget_is_unknown() {
    let (c, r) = run(
        &["decide", "--graph", "corpus:K5", "--caps", "const:4", "--param", "dp"],
        &[("WEAKSTAR_BUDGET", "5")],
    );
    assert_eq!(c, 2);
    assert_eq!(r["outcome"], "unknown");
    assert!(r["exhausted"].is_string());
}

#[test]
fn planar_and_general_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("o.jsonl").display().to_string();
    let ledger = dir.path().join("l.jsonl");
    let oct = fx("octahedron.json");
    assert_eq!(code(&["planar-cert", "--graph", &oct, "--out", &out]), 0);
    assert_eq!(code(&["verify", "--graph", &oct, "--caps", "trunc:16", "--cert", &out]), 0);

    let w20 = fx("w20.g6");
    let args = ["planar-cert", "--graph", &w20, "--k", "18", "--out", &out, "--ledger", &ledger.display().to_string()];
    assert_eq!(code(&args), 0);
    assert_eq!(code(&["verify", "--graph", &w20, "--caps", "trunc:18", "--cert", &out]), 0);
    let rounds: Vec<Value> = std::fs::read_to_string(&ledger)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert!(!rounds.is_empty());
    assert!(rounds.iter().all(|r| r["invariants"] == "ok"));

    let (c, r) = run(&["general-cert", "--graph", &oct, "--s", "3", "--t", "3"], &[]);
    assert_eq!(c, 0);
    assert_eq!(r["details"]["k"], "6635616");
}

#[test]
fn counterexample_commands() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().display().to_string();
    assert_eq!(code(&["counterexample", "build-h", "--out-dir", &d]), 0);
    let built = std::fs::read_to_string(dir.path().join("h.json")).unwrap();
    assert_eq!(built, std::fs::read_to_string(fixture("h.json")).unwrap());

    let (c, r) = run(&["counterexample", "verify-h"], &[]);
    assert_eq!(c, 0);
    assert_eq!(r["details"]["colourable"], false);
    assert_eq!(r["details"]["h3_colourings"], 0);

    let (c, r) = run(&["--deterministic", "counterexample", "verify-g42"], &[]);
    assert_eq!(c, 0);
    assert_eq!(r["counters"]["refuted"], 42);

    let (c, r) = run(&["counterexample", "verify-g42", "--drop", "7"], &[]);
    assert_eq!(c, 1);
    assert_eq!(r["details"]["full_colourings"], serde_json::json!([7]));

    assert_eq!(code(&["counterexample", "sharpness", "--s", "3", "--k", "3"]), 0);
}

#[test]
fn deterministic_reports_repeat() {
    let args = ["--deterministic", "scan", "--max-n", "4", "--suite", "splits"];
    let (c1, r1) = run(&args, &[]);
    let (_c2, r2) = run(&args, &[]);
    assert_eq!(c1, 0);
    assert_eq!(r1, r2);
    assert_eq!(r1["elapsed_ms"], 0);
}
