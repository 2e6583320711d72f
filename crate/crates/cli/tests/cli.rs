use std::fs;
use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn sqfr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sqfr")).args(args).env_remove("SQFR_PRIME").output().unwrap()
}

fn sqfr_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sqfr"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

const C5: &str = "0-1,1-2,2-3,3-4,4-0";

#[test]
fn reg_queries() {
    let out = sqfr(&["reg", "--g6", "A_", "--s", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!((v["regularity"].as_u64(), v["schema"].as_u64()), (Some(2), Some(1)));

    let v = json(&sqfr(&["reg", "--edges", C5, "--s", "2", "--betti"]));
    assert_eq!(v["regularity"], 4);
    assert_eq!(v["linear"], true);
    assert_eq!(v["betti"]["entries"][0], serde_json::json!([0, 4, 5]));

    let v = json(&sqfr(&["reg", "--edges", C5, "--s", "1"]));
    assert_eq!((v["regularity"].as_u64(), v["linear"].as_bool()), (Some(3), Some(false)));
}

#[test]
fn exit_codes() {
    assert_eq!(sqfr(&["reg", "--g6", "A_", "--s", "2"]).status.code(), Some(3));
    assert_eq!(sqfr(&["reg", "--g6", "A`", "--s", "1"]).status.code(), Some(2));
    assert_eq!(sqfr(&["reg", "--edges", "0-0", "--s", "1"]).status.code(), Some(2));
    assert_eq!(sqfr(&["reg", "--g6", "A_", "--s", "1", "--prime", "4"]).status.code(), Some(2));
    let big = "0-1,2-3,4-5,6-7,8-9,10-11,12-13,14-15";
    assert_eq!(sqfr(&["reg", "--edges", big, "--s", "2", "--cap", "10"]).status.code(), Some(4));
    assert_eq!(sqfr(&["order", "--edges", "0-1,1-2,0-2", "--s", "1"]).status.code(), Some(3));
    assert_eq!(sqfr(&["colon-graph", "--edges", "0-1,2-3", "--matching", "0-1,2-3"]).status.code(), Some(3));
    assert_eq!(sqfr(&["colon-graph", "--edges", "0-1,2-3", "--matching", "0-2"]).status.code(), Some(2));
    assert_eq!(sqfr(&["sweep", "/nonexistent/graphs.g6"]).status.code(), Some(2));
    assert_eq!(sqfr(&["sweep", "--checks", "bogus"]).status.code(), Some(2));
}

#[test]
fn env_overrides() {
    let out = Command::new(env!("CARGO_BIN_EXE_sqfr"))
        .args(["reg", "--g6", "A_", "--s", "1"])
        .env("SQFR_PRIME", "9")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn colon_graphs() {
    let v = json(&sqfr(&["colon-graph", "--edges", C5, "--matching", "0-1"]));
    assert_eq!(v["colon_graph"]["vertices"], serde_json::json!([2, 3, 4]));
    assert_eq!(v["colon_graph"]["witnesses"]["2-4"], serde_json::json!([2, 1, 0, 4]));

    let v = json(&sqfr(&["colon-graph", "--edges", "0-1,1-2,2-3", "--matching", "1-2"]));
    assert_eq!(v["colon_graph"]["edges"], serde_json::json!([[0, 3]]));
    assert_eq!(v["colon_graph"]["witnesses"]["0-3"], serde_json::json!([0, 1, 2, 3]));

    let v = json(&sqfr(&["colon-graph", "--edges", "0-1,2-3", "--matching", "2-3"]));
    assert_eq!(v["colon_graph"]["edges"], serde_json::json!([[0, 1]]));
    assert_eq!(v["colon_graph"]["witnesses"], serde_json::json!({}));
}

#[test]
fn orderings() {
    let v = json(&sqfr(&["order", "--edges", "0-1,1-2,2-3", "--s", "1"]));
    assert_eq!(v["certificate"]["ordering"], serde_json::json!([[0, 1], [1, 2], [2, 3]]));
    assert_eq!(v["certificate"]["pairs"].as_array().unwrap().len(), 3);
    let v = json(&sqfr(&["order", "--edges", C5, "--s", "1"]));
    assert_eq!(v["generators"], 5);
}

#[test]
fn sweeps() {
    let out = sqfr_stdin(&["sweep", "--checks", "dagger,cw"], "A_\nBw\nCh\n");
    assert_eq!(out.status.code(), Some(0));
    let reports = lines(&out);
    assert_eq!(reports.last().unwrap()["summary"]["fail"], 0);
    assert!(reports.iter().all(|r| r.get("summary").is_some() || r["schema"] == 1));

    let out = sqfr_stdin(&["sweep", "--checks", "dagger"], "A_\nthis is bad\nBw\n");
    assert_eq!(out.status.code(), Some(1));
    let reports = lines(&out);
    assert_eq!(reports[1]["verdict"], "error");
    assert_eq!(reports[2]["graph_id"], "Bw");

    let out = sqfr_stdin(&["sweep"], "");
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "{\"summary\":{\"pass\":0,\"fail\":0,\"skipped\":0,\"error\":0}}\n"
    );
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn sweep_files_cache_and_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("graphs.g6");
    fs::write(&input, "A_\nBw\nCh\nC`\nDhc\nCF\nCN\n").unwrap();
    let cache = dir.path().join("reg.cache");
    let (input, cache) = (input.to_str().unwrap(), cache.to_str().unwrap());
    let run = |extra: &[&str]| {
        let mut args = vec!["sweep", input, "--checks", "all"];
        args.extend_from_slice(extra);
        let out = sqfr(&args);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
        out.stdout
    };
    let cold = run(&["--cache", cache, "--jobs", "1"]);
    assert!(!fs::read_to_string(cache).unwrap().is_empty());
    let warm = run(&["--cache", cache, "--jobs", "3"]);
    assert_eq!(cold, warm);
    assert_eq!(cold, run(&[]));

    let out_path = dir.path().join("reports.jsonl");
    run(&["--out", out_path.to_str().unwrap()]);
    assert_eq!(fs::read(&out_path).unwrap(), cold);
}
