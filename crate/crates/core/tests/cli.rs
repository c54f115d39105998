use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn algshift(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_algshift")).args(args).output().expect("spawn")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("algshift-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    fs::write(&p, contents).unwrap();
    p
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn malformed_input_exits_2() {
    let p = scratch("bad.txt", "n=5 k=2\n1 9\n");
    let out = algshift(&["shift", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let p = scratch("noheader.txt", "1 2\n");
    assert_eq!(algshift(&["homology", p.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn generated_b_round_trips() {
    let out = algshift(&["gen", "b", "--n", "6"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("n=6 k=2\n"));
    assert_eq!(text.lines().count(), 1 + 6);

    let p = scratch("b6.txt", &text);
    let out = algshift(&["shift", p.to_str().unwrap(), "--order", "sumlex"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["family"].as_str().unwrap(), text);
    assert_eq!(v["fixed-point"], Value::Bool(true));
}

#[test]
fn shift_moves_a_cycle() {
    let p = scratch("c5.txt", "# five-cycle\nn=5 k=2\n1 2\n2 3\n3 4\n4 5\n1 5\n");
    let v = json(&algshift(&["shift", p.to_str().unwrap(), "--order", "revlex", "--seed", "7"]));
    assert_eq!(v["family"].as_str().unwrap(), "n=5 k=2\n1 2\n1 3\n1 4\n2 3\n2 4\n");
    assert_eq!(v["fixed-point"], Value::Bool(false));
}

#[test]
fn dominance_and_rank_commands() {
    let star = scratch("star.txt", "n=4 k=2\n1 2\n1 3\n1 4\n");
    let path = scratch("path.txt", "n=4 k=2\n1 2\n2 3\n3 4\n");
    let v = json(&algshift(&["weakiso", star.to_str().unwrap(), path.to_str().unwrap()]));
    assert_eq!(v["weakly_isomorphic"], Value::Bool(true));

    let one = scratch("one.txt", "n=4 k=2\n1 2\n");
    let v = json(&algshift(&["dominate", one.to_str().unwrap(), star.to_str().unwrap()]));
    assert_eq!(v["dominates"]["outcome"], "ProbableNo");

    let v = json(&algshift(&["rankr", star.to_str().unwrap(), "--r", "1"]));
    assert_eq!(v["rank"]["rank"], 3);
}

#[test]
fn homology_of_a_cycle() {
    let p = scratch("c4.txt", "n=4 k=2\n1 2\n2 3\n3 4\n1 4\n");
    let v = json(&algshift(&["homology", p.to_str().unwrap()]));
    assert_eq!(v["betti"]["1"], 1);
    assert_eq!(v["betti"]["0"], 0);
}

#[test]
fn verify_reports_and_exit_codes() {
    let out = algshift(&["verify", "c5-golden"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["passed"], Value::Bool(true));
    assert_eq!(v["config"]["seed"], 0);

    let dest = std::env::temp_dir().join(format!("algshift-cli-{}-report.json", std::process::id()));
    let out = algshift(&["verify", "tfree-claim", "--samples", "20", "--out", dest.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(&dest).unwrap()).unwrap();
    assert_eq!(v["cases"][0]["checked"].as_u64().unwrap() + v["cases"][1]["checked"].as_u64().unwrap(), 26);

    assert_eq!(algshift(&["verify", "no-such-campaign"]).status.code(), Some(2));
    assert_eq!(algshift(&["verify"]).status.code(), Some(2));
    assert_eq!(algshift(&["verify", "identities", "--n", "1000"]).status.code(), Some(2));
    assert_eq!(algshift(&["verify", "engine", "--prime", "12"]).status.code(), Some(2));
}
