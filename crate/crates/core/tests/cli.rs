use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn weldpath(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weldpath"))
        .args(args)
        .env_remove("WELDPATH_ORACLE_BOUND")
        .output()
        .unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, v: &Value) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, v.to_string()).unwrap();
    p.to_str().unwrap().to_string()
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_string()
}

fn read(p: &str) -> Value {
    serde_json::from_str(&std::fs::read_to_string(Path::new(p)).unwrap()).unwrap()
}

fn k2_spec() -> Value {
    json!({
        "rank": 2,
        "children": [
            {"rank": 1, "colors": ["black"], "edges": []},
            {"rank": 1, "colors": ["white"], "edges": []}
        ],
        "matchings": {"0-1": [0]}
    })
}

fn c6_spec() -> Value {
    json!({
        "rank": 1,
        "colors": ["black", "white", "black", "white", "black", "white"],
        "edges": [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [5, 0]],
        "mode": "laceable"
    })
}

#[test]
fn gen_transposition_sizes() {
    let dir = TempDir::new().unwrap();
    let out = path(&dir, "g.json");
    let o = weldpath(&["gen", "transposition", "3", "--out", &out]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("6 vertices, 9 edges"));
    assert_eq!(read(&out)["children"].as_array().unwrap().len(), 3);

    let o = weldpath(&["gen", "transposition", "1"]);
    assert_eq!(code(&o), 0);
    let spec: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(spec["colors"], json!(["black"]));
}

#[test]
fn gen_kmm_is_deterministic_and_round_trips() {
    let dir = TempDir::new().unwrap();
    let (a, b, c) = (path(&dir, "a.json"), path(&dir, "b.json"), path(&dir, "c.json"));
    let args = ["gen", "kmm-weld", "--rank", "3", "--m", "1", "--layers", "3", "--seed", "7"];
    assert_eq!(code(&weldpath(&[&args[..], &["--out", &a]].concat())), 0);
    assert_eq!(code(&weldpath(&[&args[..], &["--out", &b]].concat())), 0);
    assert_eq!(read(&a), read(&b));
    let dot = path(&dir, "a.dot");
    assert_eq!(code(&weldpath(&["gen", "custom", "--spec", &a, "--out", &c, "--dot", &dot])), 0);
    assert_eq!(read(&a), read(&c));
    assert!(std::fs::read_to_string(dot).unwrap().starts_with("graph"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&weldpath(&["gen", "hypercube", "3"])), 2);
    assert_eq!(code(&weldpath(&["gen", "transposition", "9"])), 2);
    assert_eq!(code(&weldpath(&["gen", "kmm-weld", "--rank", "3", "--m", "1", "--layers", "2"])), 2);
    let dir = TempDir::new().unwrap();
    let bad = path(&dir, "bad.json");
    std::fs::write(&bad, "{not json").unwrap();
    let pairs = write(&dir, "p.json", &json!({"pairs": [[0, 1]]}));
    assert_eq!(code(&weldpath(&["solve", "--graph", &bad, "--pairs", &pairs])), 2);
    assert_eq!(code(&weldpath(&["oracle", "--graph", &bad, "--pairs", &pairs])), 2);
}

#[test]
fn solve_k2() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "k2.json", &k2_spec());
    let p = write(&dir, "p.json", &json!({"pairs": [[0, 1]]}));
    let (cover, trace) = (path(&dir, "c.json"), path(&dir, "t.json"));
    let o = weldpath(&["solve", "--graph", &g, "--pairs", &p, "--out", &cover, "--trace", &trace]);
    assert_eq!(code(&o), 0);
    assert_eq!(read(&cover), json!({"paths": [[0, 1]]}));
    assert_eq!(read(&trace)["label"], "rank2");
}

#[test]
fn solve_then_verify_rank4() {
    let dir = TempDir::new().unwrap();
    let g = path(&dir, "g.json");
    assert_eq!(code(&weldpath(&["gen", "transposition", "4", "--out", &g])), 0);
    let p = write(&dir, "p.json", &json!({"pairs": [[0, 1], [3, 5], [8, 6]]}));
    let cover = path(&dir, "c.json");
    assert_eq!(code(&weldpath(&["solve", "--graph", &g, "--pairs", &p, "--out", &cover])), 0);
    let o = weldpath(&["verify", "--graph", &g, "--pairs", &p, "--cover", &cover]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("\"accepted\": true"));

    let mut paths = read(&cover);
    let first = paths["paths"][0].as_array_mut().unwrap();
    first.pop();
    let bad = write(&dir, "bad.json", &paths);
    let o = weldpath(&["verify", "--graph", &g, "--pairs", &p, "--cover", &bad]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("\"accepted\": false"));
}

#[test]
fn hypothesis_and_pair_errors_exit_3() {
    let dir = TempDir::new().unwrap();
    let g = path(&dir, "g.json");
    assert_eq!(code(&weldpath(&["gen", "transposition", "4", "--out", &g])), 0);
    let p = write(&dir, "p.json", &json!({"pairs": [[0, 1]]}));
    let o = weldpath(&["solve", "--graph", &g, "--pairs", &p]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("needs 3 pairs"));

    let odd = json!({
        "rank": 2,
        "children": [
            {"rank": 1, "colors": ["black", "white", "black", "white"], "edges": [[0, 1], [2, 3]], "mode": "laceable"},
            {"rank": 1, "colors": ["white", "black", "white", "black"], "edges": [[0, 1], [2, 3]], "mode": "laceable"}
        ],
        "matchings": {"0-1": [0, 1, 2, 3]}
    });
    let g = write(&dir, "odd.json", &odd);
    let o = weldpath(&["solve", "--graph", &g, "--pairs", &p]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("leaf_certified"));
}

#[test]
fn oracle_on_c6() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c6.json", &c6_spec());
    let anti = write(&dir, "a.json", &json!({"pairs": [[0, 3]]}));
    let o = weldpath(&["oracle", "--graph", &g, "--pairs", &anti]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "NONE");

    let near = write(&dir, "n.json", &json!({"pairs": [[0, 1]]}));
    let o = weldpath(&["oracle", "--graph", &g, "--pairs", &near]);
    let cover: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(cover["paths"][0].as_array().unwrap().len(), 6);

    let o = Command::new(env!("CARGO_BIN_EXE_weldpath"))
        .args(["oracle", "--graph", &g, "--pairs", &near])
        .env("WELDPATH_ORACLE_BOUND", "4")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn fuzz_is_repeatable() {
    let args = ["fuzz", "--family", "kmm-weld", "--instances", "40", "--seed", "11", "--max-rank", "4"];
    let a = weldpath(&args);
    let b = weldpath(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).starts_with("passed 40/40"));
}
