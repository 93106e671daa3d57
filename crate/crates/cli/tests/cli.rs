//! End-to-end checks of the binary: exit codes, formats, reproducibility.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const TINY: &str = "name tiny\nfuel 10000\naxiom a\naxiom a => b\naxiom b => c\naxiom !d\n";

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dovesat"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn write_tiny(dir: &Path) -> String {
    let path = dir.join("tiny.fs");
    fs::write(&path, TINY).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn prove_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = write_tiny(dir.path());
    let proved = run(&["prove", "--corpus", &corpus, "--statement", "c"]);
    assert_eq!(proved.status.code(), Some(0));
    let stdout = String::from_utf8(proved.stdout).unwrap();
    assert!(stdout.contains("decision: c"));
    assert!(stdout.contains("4: c ; mp(2,3)"));

    let refuted = run(&["prove", "--corpus", &corpus, "--statement", "d"]);
    assert_eq!(refuted.status.code(), Some(1));

    let exhausted = run(&[
        "prove", "--corpus", &corpus, "--statement", "e", "--fuel", "100",
    ]);
    assert_eq!(exhausted.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_ten() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = write_tiny(dir.path());
    let missing = run(&["prove", "--corpus", "/nonexistent.fs", "--statement", "a"]);
    assert_eq!(missing.status.code(), Some(10));
    let bad_stmt = run(&["prove", "--corpus", &corpus, "--statement", "a =>"]);
    assert_eq!(bad_stmt.status.code(), Some(10));
    let bad_flag = run(&["prove", "--corpus", &corpus]);
    assert_eq!(bad_flag.status.code(), Some(10));
    let bad_corpus_path = dir.path().join("bad.fs");
    fs::write(&bad_corpus_path, "axiom a =>\n").unwrap();
    let bad_corpus = run(&[
        "prove",
        "--corpus",
        bad_corpus_path.to_str().unwrap(),
        "--statement",
        "a",
    ]);
    assert_eq!(bad_corpus.status.code(), Some(10));
}

#[test]
fn duplicate_axiom_warns_on_stderr_only() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dup.fs");
    fs::write(&path, "axiom a\naxiom a\n").unwrap();
    let out = run(&[
        "prove",
        "--corpus",
        path.to_str().unwrap(),
        "--statement",
        "a",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("duplicate axiom"));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(!stdout.contains("duplicate"));
}

#[test]
fn check_consistency_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let good = write_tiny(dir.path());
    assert_eq!(
        run(&["check-consistency", "--corpus", &good]).status.code(),
        Some(0)
    );
    let bad_path = dir.path().join("clash.fs");
    fs::write(&bad_path, "axiom a\naxiom a => b\naxiom !b\n").unwrap();
    let out = run(&["check-consistency", "--corpus", bad_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("statement: b"));
    assert!(stdout.contains("proof_pos:"));
}

#[test]
fn degree_json_shape() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ind.fs");
    fs::write(
        &path,
        "axiom a\naxiom a => b\naxiom b => c\naxiom !d\naxiom unprov(5)\n",
    )
    .unwrap();
    let out = run(&[
        "degree",
        "--corpus",
        path.to_str().unwrap(),
        "--statement",
        "e",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("degree emits json");
    assert_eq!(value["degree"], 2);
    assert_eq!(value["subject"], "e");
    assert_eq!(value["ladder"][1], "deg(5)=1");
    assert!(value["meters"].as_array().unwrap().len() >= 2);

    let reach = run(&[
        "degree",
        "--corpus",
        path.to_str().unwrap(),
        "--statement",
        "e",
        "--operator",
        "reachability",
    ]);
    let value: serde_json::Value = serde_json::from_slice(&reach.stdout).unwrap();
    assert_eq!(value["degree"], 1);

    let exhausted = run(&[
        "degree",
        "--corpus",
        path.to_str().unwrap(),
        "--statement",
        "zz",
        "--fuel",
        "200",
    ]);
    assert_eq!(exhausted.status.code(), Some(2));
    let value: serde_json::Value = serde_json::from_slice(&exhausted.stdout).unwrap();
    assert_eq!(value["exhausted"], true);
}

#[test]
fn search_with_plants_file() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = write_tiny(dir.path());
    // A bare-halt plant: valid machine halt, empty output, so the gate
    // turns it away and the prover wins; exit stays 0.
    let plants_path = dir.path().join("plants.json");
    fs::write(&plants_path, r#"[{"index": 2, "program": [6]}]"#).unwrap();
    let out = run(&[
        "search",
        "--corpus",
        &corpus,
        "--statement",
        "c",
        "--plants",
        plants_path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["outcome"], "terminated");
    assert_eq!(value["report"]["winner_id"], 0);
    assert_eq!(value["report"]["holds"], true);
    assert_eq!(value["report"]["plants"][0], 2);
}

#[test]
fn malformed_plants_exit_ten() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = write_tiny(dir.path());
    for body in [
        "not json",
        r#"[{"index": 0, "program": []}]"#,
        r#"[{"index": 3, "program": []}, {"index": 3, "program": []}]"#,
    ] {
        let plants_path = dir.path().join("plants.json");
        fs::write(&plants_path, body).unwrap();
        let out = run(&[
            "search",
            "--corpus",
            &corpus,
            "--statement",
            "c",
            "--plants",
            plants_path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(10), "body {body}");
    }
}

#[test]
fn export_graph_formats() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = write_tiny(dir.path());
    let dot = run(&["export-graph", "--corpus", &corpus]);
    assert_eq!(dot.status.code(), Some(0));
    let text = String::from_utf8(dot.stdout).unwrap();
    assert!(text.starts_with("digraph deductions {"));
    assert!(text.contains("label=\"b => c\""));
    assert!(text.contains("mp-antecedent"));

    let json = run(&["export-graph", "--corpus", &corpus, "--format", "json"]);
    let lines: Vec<&str> = json.stdout
        .split(|&b| b == b'\n')
        .filter(|l| !l.is_empty())
        .map(|l| std::str::from_utf8(l).unwrap())
        .collect();
    for line in &lines {
        let value: serde_json::Value = serde_json::from_str(line).expect("json line");
        assert!(value["id"].is_number());
    }
    // tiny closure (7 statements) plus the refuted constant.
    assert_eq!(lines.len(), 8);
}

#[test]
fn bench_emits_csv_and_succeeds() {
    let out = run(&["bench", "--scenarios", "4", "--seed", "11"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("scenario,phi_steps,phi_prime_steps,winner_id,e,phi_C,bound,holds")
    );
    assert_eq!(lines.count(), 4);
    assert!(text.ends_with("true\n"));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = write_tiny(dir.path());
    let cases: Vec<Vec<&str>> = vec![
        vec!["prove", "--corpus", &corpus, "--statement", "c"],
        vec!["prove", "--corpus", &corpus, "--statement", "c", "--format", "json"],
        vec!["degree", "--corpus", &corpus, "--statement", "b"],
        vec!["search", "--corpus", &corpus, "--statement", "c", "--format", "json"],
        vec!["export-graph", "--corpus", &corpus],
        vec!["bench", "--scenarios", "2", "--seed", "3"],
    ];
    for args in &cases {
        let first = run(args);
        let second = run(args);
        assert_eq!(first.status.code(), second.status.code(), "{args:?}");
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}
