use std::path::Path;
use std::process::Command;

use hdecomp::cli::execute;
use hdecomp_core::generate::{complete, complete_multipartite};
use hdecomp_core::graph6::emit_graph6;
use serde_json::Value;

fn run(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hdecomp").chain(args.iter().copied());
    let code = execute(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?} failed: {err}");
    serde_json::from_str(&out).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn biex_of_octahedron_on_six_vertices() {
    let v = json(&["biex", "--h", "k222", "--n", "6"]);
    assert_eq!(v["value"], 7);
    assert_eq!(v["status"], "exact");
}

#[test]
fn phi_n_triangle_on_five_vertices() {
    let v = json(&["phi-n", "--h", "k3", "--n", "5"]);
    assert_eq!(v["value"], 6);
    // K_{2,3} is one of the maximisers.
    assert!(v["witnesses"].as_array().unwrap().iter().any(|w| w == "DFw"));
}

#[test]
fn family_sigma_and_criticality() {
    let f = json(&["family", "--h", "bowtie"]);
    assert_eq!(f["family"]["member_count"], 2);
    assert_eq!(f["minimal_family"]["minimal"], true);
    assert_eq!(json(&["sigma", "--h", "k222"])["sigma"], 2);
    assert_eq!(json(&["critical", "--h", "c5"])["edge_critical"], true);
    assert_eq!(json(&["critical", "--h", "bowtie"])["edge_critical"], false);
}

#[test]
fn family_files_feed_ex() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("oct");
    json(&["family", "--h", "k222", "--out", path_str(&prefix)]);
    let fam = dir.path().join("oct.minimal.g6");
    assert!(dir.path().join("oct.minimal.g6.json").exists());
    let v = json(&["ex", "--family", path_str(&fam), "--n", "5"]);
    assert_eq!(v["value"], 6);
}

#[test]
fn decompose_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().join("out.dec");
    let r = dir.path().join("out.json");
    let mut host = complete_multipartite(&[5, 5]);
    host.add_edge(0, 1);
    let g = emit_graph6(&host);
    let g = g.as_str();
    let (code, _, err) = run(&["decompose", "--g", g, "--h", "k3", "--out", path_str(&d), "--report", path_str(&r)]);
    assert_eq!(code, 0, "{err}");
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&r).unwrap()).unwrap();
    assert_eq!(report["format"], "hdecomp-report");
    let v = json(&["verify", "--g", g, "--decomposition", path_str(&d), "--h", "k3"]);
    assert_eq!(v["valid"], true);
    assert_eq!(v["parts"], report["report"]["t"]);
    assert_eq!(report["report"]["t"], 24);
}

#[test]
fn verify_rejects_a_foreign_graph() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().join("k4.dec");
    json(&["phi", "--g", "k4", "--h", "k3", "--out", path_str(&d)]);
    assert_eq!(run(&["verify", "--g", "k4", "--decomposition", path_str(&d)]).0, 0);
    let mut fewer = complete(4);
    fewer.remove_edge(2, 3);
    let (code, out, _) = run(&["verify", "--g", &emit_graph6(&fewer), "--decomposition", path_str(&d)]);
    assert_eq!(code, 1);
    assert!(out.contains("\"valid\": false"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["--version"]).0, 0);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["biex", "--h", "k3"]).0, 2);
    assert_eq!(run(&["decompose", "--g", "k4", "--h", "k3", "--beta", "x"]).0, 2);
    // Domain errors: a bipartite pattern has no decomposition family.
    let (code, _, err) = run(&["family", "--h", "C]"]);
    assert_eq!(code, 1, "{err}");
    assert_eq!(run(&["verify", "--g", "k4", "--decomposition", "/nonexistent/file"]).0, 1);
    // Caps.
    assert_eq!(run(&["enumerate", "--n", "9", "--cap-enumeration", "8"]).0, 3);
    assert_eq!(run(&["phi-n", "--h", "k3", "--n", "9"]).0, 3);
}

#[test]
fn enumerate_counts() {
    let (code, out, _) = run(&["enumerate", "--n", "5"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 34);
}

#[test]
fn cache_is_reused_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("ex.jsonl");
    let a = json(&["biex", "--h", "k222", "--n", "7", "--cache-path", path_str(&cache)]);
    let text = std::fs::read_to_string(&cache).unwrap();
    assert_eq!(text.lines().count(), 1);
    let b = json(&["biex", "--h", "k222", "--n", "7", "--cache-path", path_str(&cache)]);
    assert_eq!(a["value"], b["value"]);
    assert_eq!(std::fs::read_to_string(&cache).unwrap(), text);
}

#[test]
fn binary_reports_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_hdecomp");
    let ok = Command::new(bin).args(["sigma", "--h", "k4"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(v["sigma"], 1);
    let bad = Command::new(bin).arg("--no-such-flag").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
