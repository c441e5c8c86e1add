//! End-to-end tests of the binary: exit-code contract, output determinism,
//! cache round-trips, certificates, and playouts.

use std::path::PathBuf;
use std::process::{Command, Output};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bodyguards"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn tmp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("bodyguards-test-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn exit_codes_follow_the_contract() {
    // 0: computed answers, including negative verdicts
    let out = run(&["decide", "--graph", "cycle:6", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("\"win\":false"));

    // 1: usage errors
    assert_eq!(run(&["decide", "--graph", "cycle:2", "--k", "1"]).status.code(), Some(1));
    assert_eq!(run(&["decide", "--graph", "blob:3", "--k", "1"]).status.code(), Some(1));
    assert_eq!(run(&["nonsense"]).status.code(), Some(1));
    assert_eq!(
        run(&["verify-policy", "--graph", "cycle:8", "--policy", "evader-cycle", "--k", "3"])
            .status
            .code(),
        Some(1),
        "inapplicable policy is a usage error"
    );

    // 2: resource limits
    let out = run(&["number", "--graph", "cycle:6", "--state-limit", "50"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout_of(&out).contains("\"bracket\""));
}

#[test]
fn documented_command_examples() {
    let out = run(&["number", "--graph", "cycle:7"]);
    assert!(stdout_of(&out).contains("\"B\":3"));
    let out = run(&["decide", "--graph", "cart(path:4,path:4)", "--k", "4"]);
    assert!(stdout_of(&out).contains("\"win\":false"));
    let out = run(&["number", "--graph", "hypercube:3"]);
    assert!(stdout_of(&out).contains("\"B\":4"));
    let out = run(&["copnumber", "--graph", "cart(path:3,path:4)"]);
    assert!(stdout_of(&out).contains("\"c\":2"));
    let out = run(&[
        "verify-policy",
        "--graph",
        "tree:0-1;1-2;1-3;0-4;0-5",
        "--policy",
        "tree",
        "--k",
        "4",
    ]);
    assert!(stdout_of(&out).contains("\"verdict\":\"winning\""));
    let out = run(&[
        "verify-policy",
        "--graph",
        "cycle:8",
        "--policy",
        "evader-cycle",
        "--k",
        "2",
    ]);
    assert!(stdout_of(&out).contains("\"verdict\":\"evading\""));

    // a failing verdict exports its witness cycle
    let dir = tmp_dir("witness");
    let witness = dir.join("cycle.jsonl");
    let out = run(&[
        "verify-policy", "--graph", "cycle:8", "--policy", "cycle", "--k", "2",
        "--out", witness.to_str().unwrap(),
    ]);
    assert!(stdout_of(&out).contains("\"verdict\":\"losing\""));
    let lines = std::fs::read_to_string(&witness).unwrap();
    assert!(lines.lines().count() >= 2);
    assert!(lines.lines().all(|l| l.contains("placement=")));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        vec!["number", "--graph", "cycle:7"],
        vec!["decide", "--graph", "kpartite:2,3", "--k", "3"],
        vec!["verify-policy", "--graph", "cycle:8", "--policy", "cycle", "--k", "2"],
    ] {
        let a = stdout_of(&run(&args));
        let b = stdout_of(&run(&args));
        assert_eq!(a, b, "two runs of {args:?} differ");
    }
}

#[test]
fn cache_round_trip_on_randomized_boards() {
    // Twenty seeded random boards: the cached verdict must equal a fresh
    // recomputation, byte for byte on stdout.
    let dir = tmp_dir("cache");
    let cache_dir = dir.join("cache");
    let mut rng = StdRng::seed_from_u64(0xB0D76A2D);
    for case in 0..20 {
        let n = rng.random_range(4..=6usize);
        let mut edges = Vec::new();
        for u in 0..n as u16 {
            for v in u + 1..n as u16 {
                if rng.random_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        let k = rng.random_range(0..n).to_string();
        let path = dir.join(format!("g{case}.json"));
        let body = serde_json::json!({ "n": n, "edges": edges }).to_string();
        std::fs::write(&path, body).unwrap();
        let spec = format!("file:{}", path.display());
        let cache = cache_dir.to_str().unwrap();

        let fresh = stdout_of(&run(&["decide", "--graph", &spec, "--k", &k]));
        let miss = stdout_of(&run(&[
            "decide", "--graph", &spec, "--k", &k, "--cache-dir", cache,
        ]));
        let hit = stdout_of(&run(&[
            "decide", "--graph", &spec, "--k", &k, "--cache-dir", cache,
        ]));
        assert_eq!(fresh, miss, "case {case}: cache write changed the answer");
        assert_eq!(miss, hit, "case {case}: cache hit changed the answer");
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn strategy_certificates_survive_the_checker() {
    let dir = tmp_dir("cert");
    for (graph, k) in [("cycle:5", "2"), ("cycle:7", "3"), ("kpartite:2,3", "3")] {
        let cert = dir.join(format!("{}-{k}.json", graph.replace([':', ',', '(', ')'], "-")));
        let out = run(&[
            "strategy",
            "--graph",
            graph,
            "--k",
            k,
            "--out",
            cert.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0), "{}", stdout_of(&out));
        let out = run(&["verify-certificate", "--cert", cert.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        assert!(stdout_of(&out).contains("\"valid\":true"));
    }
    // tampering is caught
    let cert_path = dir.join("cycle-5-2.json");
    let text = std::fs::read_to_string(&cert_path).unwrap();
    let tampered = text.replace("\"witness_placement\": [", "\"witness_placement\": [4, ");
    let bad = dir.join("tampered.json");
    std::fs::write(&bad, tampered).unwrap();
    let out = run(&["verify-certificate", "--cert", bad.to_str().unwrap()]);
    assert!(stdout_of(&out).contains("\"valid\":false"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn playout_examples() {
    // guards keep the stay-put evader surrounded from the first answer on
    let out = run(&[
        "play", "--graph", "complete:4", "--k", "3", "--bodyguards", "universal",
        "--president", "greedy-escape", "--steps", "100",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("\"termination\":\"lasso\""));
    assert!(text.contains("\"loop_all_surrounded\":true"));

    // the cycle evader beats two scripted tokens: recurring unsafe states
    let dir = tmp_dir("play");
    let transcript = dir.join("c8.jsonl");
    let out = run(&[
        "play", "--graph", "cycle:8", "--k", "2", "--bodyguards", "cycle",
        "--president", "evader-cycle", "--steps", "200",
        "--out", transcript.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("\"loop_all_surrounded\":false"));
    let lines = std::fs::read_to_string(&transcript).unwrap();
    assert!(lines.lines().count() > 2);
    assert!(lines.lines().all(|l| l.contains("placement=")));
    std::fs::remove_dir_all(&dir).ok();

    // the solved adversary cannot escape two tokens on a pentagon
    let out = run(&[
        "play", "--graph", "cycle:5", "--k", "2", "--bodyguards", "cycle",
        "--president", "best-response", "--steps", "100",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("\"loop_all_surrounded\":true"));
}

#[test]
fn suite_runner_writes_reports() {
    let dir = tmp_dir("suite");
    let out_path = dir.join("policies.json");
    let out = bin()
        .args([
            "suite", "--name", "policies", "--workers", "2",
            "--out", out_path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stdout_of(&out));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(report["summary"]["fail"], 0);
    assert!(report["cases"].as_array().unwrap().len() >= 20);
    assert!(stdout_of(&out).contains("passed"));
    assert_eq!(
        run(&["suite", "--name", "bogus"]).status.code(),
        Some(1),
        "unknown suite is a usage error"
    );
    std::fs::remove_dir_all(&dir).ok();
}

/// The graph file interface: canonical writes, schema rejections.
#[test]
fn graph_file_interface() {
    let dir = tmp_dir("io");
    let good = dir.join("good.json");
    std::fs::write(&good, r#"{"n":2,"edges":[[0,1]]}"#).unwrap();
    let out = run(&["number", "--graph", &format!("file:{}", good.display())]);
    assert!(stdout_of(&out).contains("\"B\":1"));

    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"n":3,"edges":[[0,0]]}"#).unwrap();
    let out = run(&["number", "--graph", &format!("file:{}", bad.display())]);
    assert_eq!(out.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).ok();
}

/// Worker-count and env override leave results unchanged.
#[test]
fn workers_do_not_change_output() {
    let base = stdout_of(&run(&["number", "--graph", "cart(path:3,path:3)"]));
    let w4 = stdout_of(&run(&[
        "number", "--graph", "cart(path:3,path:3)", "--workers", "4",
    ]));
    assert_eq!(base, w4);
    let env = bin()
        .args(["number", "--graph", "cart(path:3,path:3)"])
        .env("BODYGUARDS_WORKERS", "3")
        .output()
        .unwrap();
    assert_eq!(base, String::from_utf8_lossy(&env.stdout));
}

#[test]
fn closed_mode_flag() {
    let out = run(&["number", "--graph", "path:3", "--mode", "closed"]);
    assert!(stdout_of(&out).contains("\"B\":3"));
    let out = run(&["number", "--graph", "path:3"]);
    assert!(stdout_of(&out).contains("\"B\":2"));
}
