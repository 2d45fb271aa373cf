//! End-to-end runs of the `domatic` binary.

use std::process::{Command, Output};

use num_bigint::BigUint;
use serde_json::{json, Value};

use domatic::cli::verify::{run_verify, VerifyConfig};
use domatic::graph::{canonical_code, parse_edge_list};
use domatic::tree_count::{w2_path_closed, w2_tree};

fn domatic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_domatic")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn report(args: &[&str]) -> Value {
    let out = domatic(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).unwrap()
}

#[test]
fn poly_on_a_path() {
    let r = report(&["poly", "--gen", "path:6", "--method", "tree"]);
    assert_eq!(r["polynomial"], json!({"coefficients": {"1": "1", "2": "5"}}));
    assert_eq!(r["engine"], "tree");
    assert_eq!(r["domatic_number"], 2);
    assert_eq!(r["w2"], "5");
    assert!(r["duration_ms"].is_number());
}

#[test]
fn poly_oracle_on_a_star_with_cross_check() {
    let r = report(&["poly", "--gen", "star:4", "--method", "oracle", "--cross-check"]);
    assert_eq!(r["polynomial"], json!({"coefficients": {"1": "1", "2": "1"}}));
    assert_eq!(r["engines_agree"], true);
}

#[test]
fn poly_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let single = dir.path().join("k1.txt");
    std::fs::write(&single, "# one vertex\n1 0\n").unwrap();
    let r = report(&["poly", "--input", single.to_str().unwrap()]);
    assert_eq!(r["polynomial"], json!({"coefficients": {"1": "1"}}));
    assert_eq!(r["w2"], "0");

    let triangle = dir.path().join("k3.txt");
    std::fs::write(&triangle, "3 3\n0 1\n1 2\n0 2\n").unwrap();
    let r = report(&["poly", "--input", triangle.to_str().unwrap(), "--no-timing"]);
    assert_eq!(r["engine"], "oracle");
    assert_eq!(r["polynomial"], json!({"coefficients": {"1": "1", "2": "3", "3": "1"}}));
    assert!(r.get("duration_ms").is_none());
}

#[test]
fn poly_errors() {
    let dir = tempfile::tempdir().unwrap();
    let cycle = dir.path().join("c4.txt");
    std::fs::write(&cycle, "4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    assert_eq!(
        domatic(&["poly", "--input", cycle.to_str().unwrap(), "--method", "tree"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        domatic(&["poly", "--gen", "path:30", "--method", "oracle"])
            .status
            .code(),
        Some(3)
    );

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "3 2\n0 1\n0 3\n").unwrap();
    let out = domatic(&["poly", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    assert_eq!(domatic(&["poly"]).status.code(), Some(2));
    assert_eq!(domatic(&["poly", "--gen", "wheel:5"]).status.code(), Some(2));
}

#[test]
fn verify_passes_and_caps() {
    let out = domatic(&["verify", "--max-n", "10", "--samples", "200", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 9);
    assert!(text.lines().all(|l| l.ends_with(" ok")));

    let out = domatic(&["verify", "--max-n", "3"]);
    assert_eq!(stdout(&out), "n=2 trees=102 ok\nn=3 trees=102 ok\n");
    assert_eq!(domatic(&["verify", "--max-n", "20"]).status.code(), Some(3));
}

#[test]
fn verify_catches_a_broken_engine() {
    let cfg = VerifyConfig {
        max_n: 8,
        samples: 20,
        seed: 1,
    };
    let mut log = Vec::new();
    let broken = |t: &domatic::Graph| {
        if t.order() < 4 {
            w2_tree(t)
        } else {
            Ok(BigUint::from(t.order()))
        }
    };
    let mismatch = run_verify(cfg, broken, &mut log).unwrap().expect("mismatch");
    assert_eq!(mismatch.tree.order(), 4);
    assert_eq!(mismatch.engine, BigUint::from(4u8));
    let log = String::from_utf8(log).unwrap();
    assert!(log.starts_with("n=2 trees=22 ok\nn=3 trees=22 ok\nn=4 MISMATCH"));
    let reproducer = log.split_once("reproducer:\n").unwrap().1;
    assert_eq!(parse_edge_list(reproducer).unwrap(), mismatch.tree);
}

#[test]
fn bench_counts() {
    let out = domatic(&["bench", "--family", "corona-path", "--n", "20", "--no-timing"]);
    assert_eq!(stdout(&out), "n,engine,ms,count\n20,tree,,524288\n");

    let out = domatic(&["bench", "--family", "path", "--n", "10,40,90"]);
    let lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(lines[0], "n,engine,ms,count");
    for (line, n) in lines[1..].iter().zip([10, 40, 90]) {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields[0], n.to_string());
        assert!(fields[2].parse::<f64>().unwrap() >= 0.0);
        assert_eq!(fields[3], w2_path_closed(n).unwrap().to_string());
    }

    assert_eq!(
        domatic(&["bench", "--family", "path", "--n", "40,10"]).status.code(),
        Some(2)
    );
}

#[test]
fn bench_is_deterministic_without_timing() {
    let args = [
        "bench",
        "--family",
        "random-tree",
        "--n",
        "50,100,200",
        "--seed",
        "3",
        "--no-timing",
    ];
    assert_eq!(stdout(&domatic(&args)), stdout(&domatic(&args)));
    let args = ["poly", "--gen", "random-tree:40:9", "--no-timing"];
    assert_eq!(stdout(&domatic(&args)), stdout(&domatic(&args)));
}

#[test]
fn gen_writes_edge_lists() {
    assert_eq!(stdout(&domatic(&["gen", "path:4"])), "4 3\n0 1\n1 2\n2 3\n");
    assert_eq!(stdout(&domatic(&["gen", "star:3"])), "4 3\n0 1\n0 2\n0 3\n");
    let corona = parse_edge_list(&stdout(&domatic(&["gen", "corona:path:2:1"]))).unwrap();
    assert_eq!(corona.order(), 4);
    assert!(corona.is_tree() && !corona.is_star());
}

#[test]
fn gen_round_trips_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.txt");
    let out = domatic(&["gen", "random-tree:25:4", "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let parsed = parse_edge_list(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let direct = domatic::graph::random_tree(25, 4).unwrap();
    assert_eq!(canonical_code(&parsed).unwrap(), canonical_code(&direct).unwrap());

    let r = report(&["poly", "--input", path.to_str().unwrap(), "--no-timing"]);
    assert_eq!(r["w2"], w2_tree(&direct).unwrap().to_string());
}
