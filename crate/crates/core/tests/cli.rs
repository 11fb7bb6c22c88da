//! End-to-end runs of the `msverify` binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn msverify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_msverify"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn sigma_prints_counts() {
    for (g, want) in [("A_", "3"), ("?", "1"), ("Ch", "8")] {
        let out = msverify(&["sigma", g, "--oracle"]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out).trim(), want);
    }
}

#[test]
fn sigma_reads_stdin_and_files() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_msverify"))
        .args(["sigma", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"0 1\n1 2\n2 3\n3 4\n4 0\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(stdout(&out).trim(), "11");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k4.g6");
    std::fs::write(&path, "C~\n").unwrap();
    assert_eq!(
        stdout(&msverify(&["sigma", path.to_str().unwrap()])).trim(),
        "5"
    );
}

#[test]
fn delta_prints_the_comparison() {
    let cases = [
        (["delta", "A_", "0", "1"], "+1, Odd, Positive, AGREE"),
        (["delta", "BW", "0", "1"], "-1, Even, Negative, AGREE"),
        (["delta", "A?", "0", "1"], "0, Infinite, Zero, AGREE"),
        (["delta", "Dhc", "0", "2"], "-2, Mixed, NoClaim, NOCLAIM"),
    ];
    for (args, want) in cases {
        let out = msverify(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&out).trim(), want, "{args:?}");
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["delta", "A_", "0", "2"][..],
        &["delta", "A_", "x", "1"],
        &["sigma", "~?@@"],
        &["verify", "--format", "xml"],
        &["identities", "--n", "8"],
        &["verify", "--p", "1.5"],
        &[],
    ] {
        let out = msverify(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn reports_go_to_out_and_carry_the_seed() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.jsonl");
    let out = msverify(&[
        "verify",
        "--n",
        "6",
        "--pairs",
        "vertices",
        "--family",
        "random-bipartite",
        "--seed",
        "42",
        "--count",
        "10",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines[0]["record"], "header");
    assert_eq!(lines[0]["seed"], 42);
    assert_eq!(lines[0]["config"]["family"], "random-bipartite");
    let summary = lines.last().unwrap();
    assert_eq!(summary["record"], "summary");
    assert_eq!(summary["verdict"], "PASS");
    assert!(summary["distance_checks"].as_u64().unwrap() > 0);
}

#[test]
fn tsv_summary() {
    let out = msverify(&["verify", "--n", "3", "--format", "tsv"]);
    let text = stdout(&out);
    assert!(text.starts_with("key\tvalue\n"));
    assert!(text.contains("violations\t0\n"));
    assert!(text.ends_with("verdict\tPASS\n"));
}

#[test]
fn hunt_records_reevaluate() {
    let out = msverify(&["hunt", "--n", "6", "--family", "connected-nonbipartite"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let hits: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap())
        .filter(|r| r["record"] == "counterexample")
        .collect();
    assert!(!hits.is_empty());
    for hit in hits.iter().take(10) {
        let g = hit["graph6"].as_str().unwrap();
        let u = hit["a"][0].to_string();
        let v = hit["b"][0].to_string();
        let line = stdout(&msverify(&["delta", g, &u, &v]));
        let delta = hit["delta"].as_str().unwrap();
        let shown = if delta.starts_with('-') || delta == "0" {
            delta.to_string()
        } else {
            format!("+{delta}")
        };
        assert!(line.starts_with(&format!("{shown}, ")), "{line}");
    }
}
