use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use simcent::{fixtures, io};
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_simcent")).args(args).output().expect("binary runs")
}

fn write_fixtures(dir: &Path) -> Vec<(String, PathBuf)> {
    fixtures::all()
        .into_iter()
        .map(|(name, c)| {
            let path = dir.join(format!("{name}.txt"));
            std::fs::write(&path, io::emit_complex(&c)).unwrap();
            (name.to_string(), path)
        })
        .collect()
}

fn commands(file: &str) -> Vec<Vec<String>> {
    let lines: &[&str] = &[
        "info",
        "degrees --q 0 --kind maximal",
        "degrees --q 1 --p 0 --kind lower",
        "degrees --q 1 --p 0 --kind strict-lower --h 1",
        "degrees --q 0 --h 1 --kind strict-upper",
        "degrees --q 1 --p 0 --kind maximal-adjacency",
        "laplacian --q 0 --h 1 --hp 1",
        "laplacian --q 1 --h 1 --hp 1 --part up",
        "centrality --measure degree --q 0",
        "centrality --measure eigenvector --q 1 --p 0",
        "centrality --measure closeness --q 1 --p 0",
        "centrality --measure closeness --q 1 --p 1 --semantics exact --variant reciprocal-sum",
        "centrality --measure betweenness --q 1 --p 0",
        "centrality --measure clustering --q 0",
        "centrality --measure average",
        "components --p 0",
        "components --p 1 --semantics exact",
        "oracle",
    ];
    let mut out = Vec::new();
    for line in lines {
        let mut words: Vec<String> = line.split_whitespace().map(String::from).collect();
        words.insert(1, file.to_string());
        for format in ["json", "csv"] {
            let mut w = words.clone();
            w.extend(["--format".to_string(), format.to_string()]);
            out.push(w);
        }
    }
    out
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    for (name, path) in write_fixtures(dir.path()) {
        for cmd in commands(path.to_str().unwrap()) {
            let args: Vec<&str> = cmd.iter().map(String::as_str).collect();
            let a = run(&args);
            let b = run(&args);
            assert_eq!(a.stdout, b.stdout, "{name}: {cmd:?}");
            assert_eq!(a.status.code(), b.status.code(), "{name}: {cmd:?}");
            if a.status.code() == Some(0) {
                assert!(!a.stdout.is_empty(), "{name}: {cmd:?}");
            } else {
                assert_eq!(a.status.code(), Some(2), "{name}: {cmd:?} {}", String::from_utf8_lossy(&a.stderr));
            }
        }
    }
}

#[test]
fn oracle_is_clean_on_fixtures() {
    let dir = TempDir::new().unwrap();
    for (name, path) in write_fixtures(dir.path()) {
        let out = run(&["oracle", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(doc["clean"], true);
    }
}

#[test]
fn out_flag_writes_the_same_bytes() {
    let dir = TempDir::new().unwrap();
    let file = dir.path().join("k_two.txt");
    std::fs::write(&file, "0 1 2\n1 2 3\n").unwrap();
    let target = dir.path().join("report.json");
    let printed = run(&["centrality", file.to_str().unwrap(), "--measure", "eigenvector", "--q", "2", "--p", "1"]);
    let written = run(&["centrality", file.to_str().unwrap(), "--measure", "eigenvector", "--q", "2", "--p", "1", "--out", target.to_str().unwrap()]);
    assert!(written.stdout.is_empty());
    assert_eq!(std::fs::read(&target).unwrap(), printed.stdout);
    let doc: serde_json::Value = serde_json::from_slice(&printed.stdout).unwrap();
    let values = doc["values"].as_array().unwrap();
    assert_eq!(values.len(), 2);
    for v in values {
        assert!((v["value"].as_f64().unwrap() - 0.5).abs() < 1e-10);
    }
}

#[test]
fn clustering_report_is_exact() {
    let dir = TempDir::new().unwrap();
    let file = dir.path().join("k_clust4.txt");
    std::fs::write(&file, io::emit_complex(&fixtures::k_clust4())).unwrap();
    let out = run(&["centrality", file.to_str().unwrap(), "--measure", "clustering", "--q", "1", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("1-2,") && l.contains(",2/3,")), "{text}");
}

#[test]
fn gen_is_deterministic_and_parses() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    for path in [&a, &b] {
        let out = run(&["gen", "--model", "flag", "--n", "9", "--prob", "0.4", "--seed", "11", "-o", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    assert!(text.contains("# generator: simcent-chacha8"));
    assert!(io::parse_complex_file(&text).is_ok());

    let full = run(&["gen", "--model", "pure", "--dim", "2", "--n", "4", "--prob", "1", "--seed", "0"]);
    let c = io::parse_complex_file(&String::from_utf8(full.stdout).unwrap()).unwrap();
    assert_eq!(c.f_vector(), vec![4, 6, 4]);
}

fn error_kind(out: &Output) -> String {
    let line = String::from_utf8(out.stderr.clone()).unwrap();
    assert_eq!(line.trim_end().lines().count(), 1, "{line}");
    let doc: serde_json::Value = serde_json::from_str(&line).unwrap();
    doc["kind"].as_str().unwrap().to_string()
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let good = dir.path().join("good.txt");
    std::fs::write(&good, "0 1 2\n1 2 3\n").unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "0 1\n2 2 3\n").unwrap();
    let big = dir.path().join("big.txt");
    std::fs::write(&big, (0..15).map(|v| format!("{v} {}\n", v + 1)).collect::<String>()).unwrap();

    let out = run(&["info", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(error_kind(&out), "parse");
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let out = run(&["degrees", good.to_str().unwrap(), "--q", "1", "--kind", "adjacency"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_kind(&out), "argument");

    let out = run(&["laplacian", good.to_str().unwrap(), "--q", "7", "--h", "1", "--hp", "1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["centrality", good.to_str().unwrap(), "--measure", "betweenness", "--q", "1", "--p", "0", "--semantics", "exact"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_kind(&out), "argument");

    let out = run(&["oracle", big.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(error_kind(&out), "guard");

    let out = run(&["gen", "--model", "pure", "--n", "5", "--prob", "0", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(error_kind(&out), "empty_complex");

    let out = run(&["gen", "--model", "flag", "--n", "5", "--prob", "1.5", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(2));
}
