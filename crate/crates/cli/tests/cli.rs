use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn rd2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rd2"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn construct(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name).to_string_lossy().into_owned();
    let mut full = vec!["construct"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", &path]);
    let out = rd2(&full);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    path
}

#[test]
fn construct_writes_expected_sizes() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = construct(dir.path(), "k4.kcol", &["--k", "4", "--s", "1"]);
    let text = std::fs::read_to_string(&k4).unwrap();
    assert!(text.starts_with("kcol 1 9 4\n"));
    let k3 = construct(dir.path(), "k3.kcol", &["--k", "3", "--s", "3"]);
    assert!(std::fs::read_to_string(k3)
        .unwrap()
        .starts_with("kcol 1 19 3\n"));
    let bad = rd2(&["construct", "--k", "3", "--s", "4"]);
    assert_eq!(bad.status.code(), Some(2));
    let missing = rd2(&["construct", "--k", "4"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn construct_to_stdout_round_trips() {
    let out = rd2(&["construct", "--two-color", "10"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = construct(dir.path(), "t.kcol", &["--two-color", "10"]);
    assert_eq!(std::fs::read_to_string(path).unwrap(), text);
}

#[test]
fn solve_and_oracle_agree_on_two_color_eight() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct(dir.path(), "t8.kcol", &["--two-color", "8"]);
    for cmd in ["solve", "oracle"] {
        let out = rd2(&[cmd, "--in", &path]);
        assert!(out.status.success());
        let v = json(&out);
        let optima: Vec<u64> = v
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r["optimum"].as_u64().unwrap())
            .collect();
        assert_eq!(optima, [6, 6], "{cmd}");
    }
}

#[test]
fn solve_single_color_within_bound() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct(dir.path(), "k4.kcol", &["--k", "4", "--s", "1"]);
    let v = json(&rd2(&[
        "solve",
        "--in",
        &path,
        "--color",
        "0",
        "--deterministic",
    ]));
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 1);
    assert!(arr[0]["optimum"].as_u64().unwrap() <= 9);
    assert_eq!(arr[0]["proven_optimal"], Value::Bool(true));
    let oracle = json(&rd2(&["oracle", "--in", &path]));
    assert_eq!(oracle.as_array().unwrap().len(), 4);
    let bad = rd2(&["solve", "--in", &path, "--color", "9"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn malformed_input_exits_two_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.kcol");
    std::fs::write(&path, "kcol 1 3 2\n0 1\n").unwrap();
    let out = rd2(&["solve", "--in", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3"), "{err}");
    let out = rd2(&[
        "solve",
        "--in",
        dir.path().join("absent.kcol").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_refuses_large_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct(dir.path(), "t30.kcol", &["--two-color", "30"]);
    let out = rd2(&["oracle", "--in", &path]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn dimacs_export_and_solve() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("ext").to_string_lossy().into_owned();
    construct(
        dir.path(),
        "t8.kcol",
        &["--two-color", "8", "--emit-dimacs", &prefix],
    );
    for (c, edges) in [(0, 12), (1, 16)] {
        let file = format!("{prefix}_color{c}.dimacs");
        let text = std::fs::read_to_string(&file).unwrap();
        assert!(text.starts_with(&format!("p edge 8 {edges}\n")));
        let v = json(&rd2(&["solve", "--dimacs", &file]));
        assert_eq!(v[0]["optimum"], 6);
        assert_eq!(v[0]["color"], Value::Null);
    }
}

#[test]
fn verify_targets_and_exit_codes() {
    let out = rd2(&["verify", "--target", "lemma2", "--s", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["colors"][0]["value"], 4);
    assert_eq!(v["colors"][0]["claimed_bound"], 4);
    assert_eq!(v["pass"], true);

    let out = rd2(&["verify", "--target", "identities", "--k", "3", "--s", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["identities"][0]["claimed"], "[13,24]");

    // the quoted split-class set is wrong at s = 3, so this report fails
    let out = rd2(&["verify", "--target", "identities", "--k", "3", "--s", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["identities"][0]["claimed"], "[7,12]");
    assert_eq!(v["identities"][0]["matches"], true);

    let out = rd2(&[
        "verify", "--target", "thm1", "--n", "20", "--trials", "200", "--seed", "7",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["trials"]["passed"], 200);
    assert!(v["trials"]["smallest_output"].as_u64().unwrap() >= 15);

    let out = rd2(&[
        "verify", "--target", "thm3", "--k", "5", "--s", "2", "--csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("section,item,claimed,computed"));
    assert_eq!(text.lines().filter(|l| l.starts_with("color,")).count(), 5);

    let out = rd2(&["verify", "--target", "thm2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_ascii_and_key_ordered() {
    let out = rd2(&["verify", "--target", "thm2", "--s", "3"]);
    assert!(out.stdout.is_ascii());
    let text = String::from_utf8(out.stdout).unwrap();
    let keys = ["\"target\"", "\"construction\"", "\"colors\"", "\"pass\""];
    let pos: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn thread_cap_is_respected_and_validated() {
    let out = Command::new(env!("CARGO_BIN_EXE_rd2"))
        .args(["verify", "--target", "thm3", "--k", "4", "--s", "1"])
        .env("RD2_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = Command::new(env!("CARGO_BIN_EXE_rd2"))
        .args(["verify", "--target", "lemma2", "--s", "1"])
        .env("RD2_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
