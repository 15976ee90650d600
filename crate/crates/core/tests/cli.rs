use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_galekit")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    v
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn alt_command() {
    assert_eq!(json(&["alt", "--family", "kneser:5,2", "--mode", "alt"])["value"], 2);
    let v = json(&["alt", "--family", "schrijver:6,2", "--mode", "salt", "--sigma", "identity"]);
    assert_eq!(v["value"], 3);
    assert_eq!(v["exact"], true);
    assert_eq!(json(&["alt", "--family", "pnks:8,2,2"])["value"], 3);
    let v = json(&["alt", "--family", "kneser:5,2", "--sigma", "5,4,3,2,1"]);
    assert_eq!(v["sigma"][0], "5");
}

#[test]
fn alt_on_edgeless_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.json");
    std::fs::write(&path, r#"{"vertices": ["a", "b", "c"], "edges": []}"#).unwrap();
    let v = json(&["alt", "--input", path.to_str().unwrap(), "--mode", "salt"]);
    assert_eq!(v["value"], 3);
    assert_eq!(v["degenerate"], true);
}

#[test]
fn gale_command() {
    let v = json(&["gale", "--family", "schrijver:6,2"]);
    assert_eq!(v["d"], 2);
    assert_eq!(v["verdict"]["ok"], true);
    assert_eq!(v["verdict"]["mode"], "exact");
    let v = json(&["gale", "--family", "pnks:8,2,2", "--trials", "100000", "--seed", "7"]);
    assert_eq!(v["d"], 4);
    assert_eq!(v["verdict"]["ok"], true);
    assert_eq!(v["verdict"]["trials"], 100000);
    assert_eq!(v["configuration"]["points"].as_array().unwrap().len(), 8);
    assert_eq!(code(&["gale", "--n", "5", "--d", "5"]), 2);
    assert_eq!(code(&["gale", "--n", "5", "--d", "-1"]), 2);
    assert_eq!(json(&["gale", "--n", "5", "--d", "2"])["configuration"]["d"], 2);
    assert_eq!(code(&["gale", "--family", "pnks:8,2,2", "--verify", "exact"]), 3);
}

#[test]
fn bounds_command() {
    let v = json(&["bounds", "--family", "kneser:5,2"]);
    let r = &v["reports"][0]["report"];
    for field in ["chi", "cd", "alt_bound", "salt_bound"] {
        assert_eq!(r[field]["value"], 3, "{field}");
        assert_eq!(r[field]["exact"], true);
    }
    let v = json(&["bounds", "--family", "sstable:8,2,2", "--family", "kneser:4,2"]);
    assert_eq!(v["reports"][0]["report"]["chi"]["value"], 6);
    assert_eq!(v["reports"][1]["report"]["chi"]["value"], 2);
    assert!(v["violations"].as_array().unwrap().is_empty());

    let out = run(&["bounds", "--family", "kneser:5,2", "--family", "kneser:4,2", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 3);
    assert!(text.lines().nth(1).unwrap().starts_with("\"kneser:5,2\",5,10,3,3,"));

    let out = run(&["bounds", "--family", "kneser:5,2", "--format", "text"]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("chi"));
    assert_eq!(code(&["bounds", "--family", "pnks:8,2,2"]), 2);
}

#[test]
fn bounds_partial_on_capacity() {
    let v = json(&["bounds", "--family", "kneser:5,2", "--max-vertices", "4"]);
    let r = &v["reports"][0]["report"];
    assert!(r["chi"]["value"].is_null());
    assert!(r["chi"]["error"].as_str().unwrap().contains("refused"));
    assert_eq!(r["salt_bound"]["value"], 3);
}

#[test]
fn multichi_command() {
    assert_eq!(json(&["multichi", "--family", "kneser:5,2", "--m", "2", "--nmax", "8"])["value"], 5);
    assert_eq!(json(&["multichi", "--family", "sstable:6,2,2", "--m", "1", "--nmax", "8"])["value"], 4);
    assert_eq!(json(&["multichi", "--family", "kneser:4,2", "--m", "1"])["value"], 2);
    assert_eq!(code(&["multichi", "--family", "kneser:5,2", "--m", "2", "--nmax", "4"]), 3);
}

#[test]
fn boxcomplex_command() {
    let fv = |g: &str, variant: &str| json(&["boxcomplex", "--graph", g, "--variant", variant])["f_vector"].clone();
    assert_eq!(fv("k2", "b0"), serde_json::json!([4, 4]));
    assert_eq!(fv("k2", "b"), serde_json::json!([4, 2]));
    assert_eq!(fv("k1", "b0"), serde_json::json!([2]));
    let v = json(&["boxcomplex", "--graph", "c5"]);
    assert_eq!(v["free"], true);
    assert_eq!(v["hereditary"], true);
    assert_eq!(code(&["boxcomplex", "--graph", "k17"]), 3);
}

#[test]
fn input_errors() {
    assert_eq!(code(&["alt", "--family", "petersen:5,2"]), 2);
    assert_eq!(code(&["alt", "--family", "kneser:5"]), 2);
    assert_eq!(code(&["alt"]), 2);
    assert_eq!(code(&["alt", "--input", "/nonexistent/h.json"]), 2);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\"vertices\": [\"a\",\n  \"b\"], \"edges\": [[\"a\", \"z\"]]").unwrap();
    let out = run(&["alt", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line"));
}

#[test]
fn output_is_reproducible() {
    let args = ["gale", "--family", "pnks:8,2,2", "--trials", "20000", "--seed", "11"];
    let a = run(&args).stdout;
    let b = run(&args).stdout;
    assert_eq!(a, b);
    let mut threaded = vec!["--threads", "1"];
    threaded.extend(args);
    assert_eq!(run(&threaded).stdout, a);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = run(&["bounds", "--family", "schrijver:7,2", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    let file = std::fs::read(&path).unwrap();
    assert_eq!(file, run(&["bounds", "--family", "schrijver:7,2"]).stdout);
}
