use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_biased-pred"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn bench_json(args: &[&str]) -> Value {
    let mut full = vec!["bench"];
    full.extend_from_slice(args);
    let out = bin(&full);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn gen_keys_file() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    for p in [&a, &b] {
        let out = bin(&["gen", "--universe-bits", "16", "--n", "1024", "--seed", "7", "--out", path(p)]);
        assert_eq!(out.status.code(), Some(0));
    }
    let text = fs::read_to_string(&a).unwrap();
    let keys: Vec<u64> = text.lines().map(|l| l.parse().unwrap()).collect();
    assert_eq!(keys.len(), 1024);
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
    assert!(keys.iter().all(|&k| k < 1 << 16));
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn gen_weights_file() {
    let dir = tempfile::tempdir().unwrap();
    let support = dir.path().join("support.txt");
    fs::write(&support, "9\n3\n5\n").unwrap();
    let out_path = dir.path().join("w.txt");
    let out = bin(&["gen", "--dist", "geometric", "--support", path(&support), "--out", path(&out_path)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = fs::read_to_string(&out_path).unwrap();
    let mut lines: Vec<(u64, f64)> = text
        .lines()
        .map(|l| {
            let (k, w) = l.split_once('\t').unwrap();
            (k.parse().unwrap(), w.parse().unwrap())
        })
        .collect();
    lines.sort_by_key(|&(k, _)| k);
    assert_eq!(lines, vec![(3, 0.5), (5, 0.25), (9, 1.0)]);

    let missing = bin(&["gen", "--dist", "uniform", "--out", path(&out_path)]);
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn bench_point_mass_hits_first_layer() {
    let v = bench_json(&["--structure", "layered", "--dist-kind", "pointmass", "--queries", "2000"]);
    assert_eq!(v["mean_layers_probed"], 1.0);
    assert_eq!(v["bound_violations"], 0);
    assert_eq!(v["input_entropy"], 0.0);
}

#[test]
fn bench_geometric_layered() {
    let v = bench_json(&[
        "--structure", "layered", "--universe-bits", "16", "--n", "1024", "--dist-kind", "geometric", "--queries", "10000",
    ]);
    assert!(v["mean_layers_probed"].as_f64().unwrap() <= 2.0);
    assert_eq!(v["query_count"], 10000);
    assert_eq!(v["prng"], "chacha8");
}

#[test]
fn bench_uniform_support_misses_table() {
    // With 4096 equally likely queries each has probability 2^-12, below 2^-8.
    let v = bench_json(&[
        "--structure", "hashfront-a", "--epsilon", "0.5", "--dist-kind", "uniform", "--support-size", "4096",
    ]);
    assert_eq!(v["hit_rate"], 0.0);
    assert_eq!(v["table_size"], 0);
    assert_eq!(v["mode"], "A");
}

#[test]
fn bench_csv_and_outfile() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("r.csv");
    let out = bin(&["bench", "--structure", "yfast", "--format", "csv", "--queries", "100", "--out", path(&out_path)]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&out_path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("structure,mode,epsilon,universe_bits,n,"));
    assert!(lines[0].ends_with("oracle_mismatches,ns_per_query"));
    assert_eq!(lines[0].split(',').count(), lines[1].split(',').count());
    assert!(lines[1].starts_with("yfast,,,16,1024,"));
}

#[test]
fn bench_replays_query_file() {
    let dir = tempfile::tempdir().unwrap();
    let keys = dir.path().join("k.txt");
    let queries = dir.path().join("q.txt");
    fs::write(&keys, "10\n20\n30\n").unwrap();
    fs::write(&queries, "5\n10\n25\n255\n").unwrap();
    let v = bench_json(&[
        "--structure", "layered-ws", "--universe-bits", "8", "--keys", path(&keys), "--query-file", path(&queries),
    ]);
    assert_eq!(v["query_count"], 4);
    assert_eq!(v["n"], 3);
}

#[test]
fn verify_small_universes() {
    let out = bin(&["verify", "--structure", "yfast", "--universe-bits", "12", "--n", "256"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    for s in ["xfast", "hashfront-a", "hashfront-b", "layered"] {
        let out = bin(&["verify", "--structure", s, "--universe-bits", "10", "--n", "100", "--dist-kind", "zipf"]);
        assert_eq!(out.status.code(), Some(0), "{s}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn verify_working_set_script() {
    let dir = tempfile::tempdir().unwrap();
    let script = dir.path().join("s.txt");
    let lines: String = (0..3000u64).map(|i| format!("{}\n", (i * i * 31) % 4096)).collect();
    fs::write(&script, lines).unwrap();
    let out = bin(&[
        "verify", "--structure", "layered-ws", "--universe-bits", "12", "--n", "300", "--query-file", path(&script),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn verify_refuses_wide_universe() {
    let out = bin(&["verify", "--structure", "yfast", "--universe-bits", "20"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("16 bits"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(bin(&["bench", "--structure", "yfast", "--bogus"]).status.code(), Some(1));
    assert_eq!(bin(&["bench", "--structure", "nope"]).status.code(), Some(1));
    assert_eq!(bin(&["bench", "--structure", "yfast", "--universe-bits", "0"]).status.code(), Some(1));
    assert_eq!(bin(&["bench", "--structure", "hashfront-b", "--epsilon", "1.0"]).status.code(), Some(1));
    assert_eq!(bin(&[]).status.code(), Some(1));
    assert_eq!(bin(&["--help"]).status.code(), Some(0));
}
