use std::fs;
use std::path::PathBuf;

use iassl::cli::{run, EXIT_CAPACITY, EXIT_INPUT, EXIT_NO, EXIT_OK};
use serde_json::Value;

const P3: &str = r#"{"ground":[0,1],"vertices":[{"id":0,"label":[1]},{"id":1,"label":[0]},{"id":2,"label":[0,1]}],"edges":[[0,1],[1,2]]}"#;

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("iassl-cli-{}-{name}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn call(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut full = vec!["iassl"];
    full.extend_from_slice(args);
    let code = run(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn classify_reports_rho() {
    let (code, out, _) = call(&["classify", "--ground-set", "0,1,2"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["rho"], 4);
    assert_eq!(v["rho_prime"], 2);
    assert_eq!(v["b_family"], serde_json::json!([[0], [0, 2]]));
}

#[test]
fn verify_exit_codes() {
    let dir = scratch("verify");
    let g = dir.join("p3.json");
    fs::write(&g, P3).unwrap();
    let g = g.to_str().unwrap();

    let (code, out, _) = call(&["verify", "--graph", g, "--ground-set", "0,1", "--predicate", "iassl"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["kappa"], 2);
    assert_eq!(v["is_iasgl"], true);

    let (code, _, _) = call(&["verify", "--graph", g, "--ground-set", "0,1", "--predicate", "iassi"]);
    assert_eq!(code, EXIT_NO);

    let (code, _, err) = call(&["verify", "--graph", g, "--ground-set", "0,1,1"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("duplicate"), "{err}");

    let missing = dir.join("nope.json");
    let (code, _, _) = call(&["verify", "--graph", missing.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);

    let bad = dir.join("bad.json");
    fs::write(&bad, r#"{"vertices":[],"edges":[],"extra":true}"#).unwrap();
    let (code, _, _) = call(&["verify", "--graph", bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn construct_writes_graph_trace_and_dot() {
    let dir = scratch("construct");
    let g = dir.join("g.json");
    let dot = dir.join("g.dot");
    let (code, _, _) = call(&[
        "construct",
        "--ground-set",
        "0,1,2",
        "--mode",
        "iassl",
        "--out",
        g.to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    let trace: Value = serde_json::from_str(&fs::read_to_string(dir.join("g.trace.json")).unwrap()).unwrap();
    assert_eq!(trace["rho"], 4);
    assert_eq!(trace["report"]["is_iassl"], true);
    assert!(fs::read_to_string(&dot).unwrap().starts_with("graph G {"));

    let (code, _, _) = call(&["verify", "--graph", g.to_str().unwrap(), "--predicate", "iassl"]);
    assert_eq!(code, EXIT_OK);
    let (code, out, _) = call(&["export-dot", "--graph", g.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, fs::read_to_string(&dot).unwrap());
}

#[test]
fn search_and_min_ground() {
    let dir = scratch("search");
    let g = dir.join("p3.json");
    fs::write(&g, P3).unwrap();
    let g = g.to_str().unwrap();

    let (code, out, _) = call(&["search", "--graph", g, "--ground-set", "0,1", "--all"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["solutions"].as_array().unwrap().len(), 2);
    assert_eq!(v["exhausted"], true);

    let seq = call(&["search", "--graph", g, "--ground-set", "0,1,2", "--all", "--cap", "5"]);
    let par = call(&["search", "--graph", g, "--ground-set", "0,1,2", "--all", "--cap", "5", "--parallel"]);
    assert_eq!(seq, par);

    let (code, out, _) = call(&["search", "--graph", g, "--xsize", "3", "--xmax", "4"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["ground"], serde_json::json!([0, 1]));

    let (code, _, _) = call(&["search", "--graph", g, "--ground-set", "0,1,2", "--predicate", "iassi"]);
    assert_eq!(code, EXIT_NO);

    let (code, _, _) = call(&["search", "--graph", g, "--ground-set", "0,1,2,3,4,5"]);
    assert_eq!(code, EXIT_CAPACITY);
    let (code, _, _) = call(&["search", "--graph", g, "--ground-set", "0,1,2,3,4,5", "--max-ground", "6"]);
    assert_eq!(code, EXIT_NO);

    let (code, _, _) = call(&["search", "--graph", g, "--ground-set", "0,1", "--cap", "0"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn sweep_emits_json_lines() {
    let (code, out, _) = call(&["sweep", "--family", "cycles", "--n", "3..5", "--xmax", "4", "--xsize", "3"]);
    assert_eq!(code, EXIT_OK);
    let rows: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 33);
    assert!(rows.iter().all(|r| r["decision"] == false && r["exhausted"] == true));

    let (code, out, _) = call(&["sweep", "--family", "stars", "--n", "3", "--xmax", "1", "--xsize", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.lines().any(|l| l.contains("\"decision\":true")));

    let (code, _, _) = call(&["sweep", "--family", "blobs", "--n", "3"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn audit_to_file_is_stable() {
    let dir = scratch("audit");
    let a = dir.join("a.json");
    let b = dir.join("b.json");
    for p in [&a, &b] {
        let (code, _, _) = call(&["audit", "--xmax", "3", "--xsize", "3", "--nmax", "4", "--out", p.to_str().unwrap()]);
        assert_eq!(code, EXIT_OK);
    }
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    let v: Value = serde_json::from_str(&text).unwrap();
    assert!(v["claims"].as_array().unwrap().len() >= 7);

    let (code, _, _) = call(&["audit", "--xsize", "6"]);
    assert_eq!(code, EXIT_CAPACITY);
}

#[test]
fn help_and_version() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, EXIT_OK);
    for sub in ["classify", "verify", "construct", "search", "sweep", "audit", "export-dot"] {
        assert!(out.contains(sub), "{sub}");
    }
    let (code, out, _) = call(&["--version"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains(env!("CARGO_PKG_VERSION")));
    let (code, _, _) = call(&["frobnicate"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn environment_overrides_capacity() {
    let dir = scratch("env");
    let g = dir.join("p3.json");
    fs::write(&g, P3).unwrap();
    let bin = env!("CARGO_BIN_EXE_iassl");
    let status = |var: &str, value: &str, extra: &[&str]| {
        std::process::Command::new(bin)
            .args(["search", "--graph", g.to_str().unwrap(), "--ground-set", "0,1,2"])
            .args(extra)
            .env(var, value)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(status("IASSL_SEARCH_MAX_GROUND", "2", &[]), Some(EXIT_CAPACITY));
    assert_eq!(status("IASSL_SEARCH_MAX_GROUND", "2", &["--max-ground", "3"]), Some(EXIT_NO));
    assert_eq!(status("IASSL_SEARCH_MAX_VERTICES", "2", &[]), Some(EXIT_CAPACITY));
    assert_eq!(status("IASSL_SEARCH_MAX_GROUND", "lots", &[]), Some(EXIT_INPUT));
}
