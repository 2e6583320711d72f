mod common;

use std::fs;

use sqfr_core::report::CheckId;
use sqfr_core::{run_sweep, Checker, HomologyConfig, RegCache};

fn small_connected() -> String {
    common::corpus("connected_n1_7.g6")
        .into_iter()
        .filter(|(_, g)| (2..=5).contains(&g.n()))
        .map(|(id, _)| id + "\n")
        .collect()
}

fn sweep(input: &str, checks: &[CheckId], cache: RegCache) -> (String, sqfr_core::Summary) {
    let checker = Checker::new(HomologyConfig::default(), 0, cache);
    let mut out = Vec::new();
    let summary = run_sweep(input.as_bytes(), &mut out, checks, &checker).unwrap();
    (String::from_utf8(out).unwrap(), summary)
}

#[test]
fn dagger_sweep_over_small_connected_graphs() {
    let (_, summary) = sweep(&small_connected(), &[CheckId::Dagger], RegCache::in_memory());
    assert!(summary.pass > 0);
    assert_eq!((summary.fail, summary.skipped, summary.error), (0, 0, 0));
}

#[test]
fn all_checks_stay_clear() {
    let (_, summary) = sweep(&small_connected(), &CheckId::ALL, RegCache::in_memory());
    assert!(summary.all_clear(), "{summary:?}");
}

#[test]
fn warm_cache_reproduces_output() {
    let dir = tempdir();
    let path = dir.join("reg.cache");
    let input = small_connected();
    let checks = [CheckId::Dagger, CheckId::CameronWalker];
    let (cold, _) = sweep(&input, &checks, RegCache::with_file(&path).unwrap());
    let entries = fs::read_to_string(&path).unwrap().lines().count();
    assert!(entries > 0);
    // garbage lines are ignored
    fs::write(&path, fs::read_to_string(&path).unwrap() + "junk\n\tno\tkey\n").unwrap();
    let (warm, _) = sweep(&input, &checks, RegCache::with_file(&path).unwrap());
    assert_eq!(cold, warm);
    let (plain, _) = sweep(&input, &checks, RegCache::in_memory());
    assert_eq!(cold, plain);
    assert_eq!(fs::read_to_string(&path).unwrap().lines().count(), entries + 2);
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn reports_follow_input_order_across_threads() {
    let input = small_connected();
    let (serial, _) = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| sweep(&input, &[CheckId::Dagger], RegCache::in_memory()));
    let (parallel, _) = rayon::ThreadPoolBuilder::new()
        .num_threads(4)
        .build()
        .unwrap()
        .install(|| sweep(&input, &[CheckId::Dagger], RegCache::in_memory()));
    assert_eq!(serial, parallel);
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("sqfr-sweep-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}
