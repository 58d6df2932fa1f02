//! End-to-end tests of the `matchcut` binary: subcommand round trips,
//! output formats, and exit codes (0 success, 1 failed verification,
//! 2 usage or input errors).

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_matchcut"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

/// Fresh scratch directory, distinct per test.
fn scratch(test: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("matchcut-cli-{}-{test}", std::process::id()));
    fs::create_dir_all(&dir).expect("scratch dir");
    dir
}

#[test]
fn gen_then_count_round_trip() {
    let dir = scratch("roundtrip");
    let graph = dir.join("c6.graph");
    let gen = run(&[
        "gen",
        "--family",
        "cycle",
        "--n",
        "6",
        "--out",
        graph.to_str().unwrap(),
    ]);
    assert!(gen.status.success(), "{}", stderr(&gen));

    for method in ["oracle", "spanning-tree", "vc", "fen"] {
        let out = run(&[
            "count",
            "--kind",
            "all",
            "--method",
            method,
            graph.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "{method}: {}", stderr(&out));
        assert_eq!(stdout(&out).trim(), "9", "method {method}");
    }
}

#[test]
fn enum_prints_sorted_pairs_and_empty_marker() {
    let dir = scratch("enum");
    let graph = dir.join("stars.graph");
    // Two stars: disconnected, so the empty cut is a matching cut.
    run(&[
        "gen",
        "--family",
        "star-forest",
        "--k",
        "2",
        "--p",
        "3",
        "--out",
        graph.to_str().unwrap(),
    ]);

    let all = run(&["enum", "--kind", "all", graph.to_str().unwrap()]);
    assert!(all.status.success());
    let text = stdout(&all);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 16);
    assert!(lines.contains(&"EMPTY"));
    for line in &lines {
        if *line == "EMPTY" {
            continue;
        }
        let pairs: Vec<&str> = line.split(' ').collect();
        let mut sorted = pairs.clone();
        sorted.sort();
        assert_eq!(pairs, sorted, "unsorted line `{line}`");
        for pair in pairs {
            let (u, v) = pair.split_once('-').expect("u-v pair");
            assert!(u.parse::<usize>().unwrap() < v.parse::<usize>().unwrap());
        }
    }

    // The empty cut is the unique minimal cut of a disconnected graph.
    let minimal = run(&["enum", "--kind", "minimal", graph.to_str().unwrap()]);
    assert_eq!(stdout(&minimal).trim(), "EMPTY");
}

#[test]
fn kernelize_emits_a_parseable_smaller_graph() {
    let dir = scratch("kernelize");
    let graph = dir.join("k6.graph");
    run(&[
        "gen",
        "--family",
        "complete",
        "--n",
        "6",
        "--out",
        graph.to_str().unwrap(),
    ]);

    let out = run(&["kernelize", "--method", "nd", graph.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(
        text.contains("# method nd"),
        "missing context comment:\n{text}"
    );
    let kernel = matchcut::fileio::parse_graph(&text).expect("kernel parses");
    assert!(
        kernel.n() < 6,
        "K6 should shrink, got {} vertices",
        kernel.n()
    );

    // --out writes the same content to a file.
    let kfile = dir.join("kernel.graph");
    let out2 = run(&[
        "kernelize",
        "--method",
        "nd",
        "--out",
        kfile.to_str().unwrap(),
        graph.to_str().unwrap(),
    ]);
    assert!(out2.status.success());
    assert_eq!(fs::read_to_string(&kfile).unwrap(), text);
}

#[test]
fn verify_passes_with_exit_zero_and_tsv_report() {
    let dir = scratch("verify");
    let graph = dir.join("ladder.graph");
    run(&[
        "gen",
        "--family",
        "path-ladder",
        "--k",
        "2",
        "--l",
        "4",
        "--out",
        graph.to_str().unwrap(),
    ]);

    let out = run(&[
        "verify",
        "--method",
        "tc",
        "--kind",
        "minimal",
        graph.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("instance\tmethod\tkind"));
    let row = lines.next().unwrap();
    assert!(row.ends_with("pass"), "row: {row}");
}

#[test]
fn planted_clique_partition_round_trips_through_files() {
    let dir = scratch("cliques");
    let graph = dir.join("rc.graph");
    let gen = run(&[
        "gen",
        "--family",
        "random-cliques",
        "--k",
        "3",
        "--n",
        "9",
        "--seed",
        "5",
        "--out",
        graph.to_str().unwrap(),
    ]);
    assert!(gen.status.success());
    let sidecar = dir.join("rc.graph.partition");
    assert!(sidecar.exists(), "certificate sidecar missing");

    let via_cp = run(&[
        "count",
        "--method",
        "cp",
        "--partition",
        sidecar.to_str().unwrap(),
        graph.to_str().unwrap(),
    ]);
    let via_oracle = run(&["count", "--method", "oracle", graph.to_str().unwrap()]);
    assert!(via_cp.status.success(), "{}", stderr(&via_cp));
    assert_eq!(stdout(&via_cp), stdout(&via_oracle));

    // Without --out the certificate rides along as comment lines, which a
    // graph-file parser ignores.
    let on_stdout = run(&[
        "gen",
        "--family",
        "random-cliques",
        "--k",
        "3",
        "--n",
        "9",
        "--seed",
        "5",
    ]);
    let text = stdout(&on_stdout);
    assert!(text.contains("# clique block:"));
    matchcut::fileio::parse_graph(&text).expect("stdout form parses as a graph file");
}

#[test]
fn usage_and_input_errors_exit_two() {
    let dir = scratch("errors");
    let graph = dir.join("c5.graph");
    run(&[
        "gen",
        "--family",
        "cycle",
        "--n",
        "5",
        "--out",
        graph.to_str().unwrap(),
    ]);

    // cp without a certificate.
    let no_cert = run(&["enum", "--method", "cp", graph.to_str().unwrap()]);
    assert_eq!(no_cert.status.code(), Some(2));
    assert!(stderr(&no_cert).contains("certificate"));

    // Method/kind combination that is not supported.
    let bad_kind = run(&[
        "count",
        "--method",
        "fen",
        "--kind",
        "maximal",
        graph.to_str().unwrap(),
    ]);
    assert_eq!(bad_kind.status.code(), Some(2));

    // Unknown method name is a clap-level usage error.
    let bad_method = run(&["count", "--method", "bogus", graph.to_str().unwrap()]);
    assert_eq!(bad_method.status.code(), Some(2));

    // Kernel-free methods are rejected for `kernelize`.
    let no_kernel = run(&["kernelize", "--method", "oracle", graph.to_str().unwrap()]);
    assert_eq!(no_kernel.status.code(), Some(2));

    // Missing input file names the path.
    let missing = run(&["count", dir.join("nope.graph").to_str().unwrap()]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(stderr(&missing).contains("nope.graph"));

    // Malformed graph file reports the line.
    let bad = dir.join("bad.graph");
    fs::write(&bad, "2 1\n0 east\n").unwrap();
    let parse = run(&["count", bad.to_str().unwrap()]);
    assert_eq!(parse.status.code(), Some(2));
    assert!(stderr(&parse).contains("line 2"));

    // Family parameter validation.
    let missing_p = run(&["gen", "--family", "star-forest", "--k", "2"]);
    assert_eq!(missing_p.status.code(), Some(2));
    assert!(stderr(&missing_p).contains("--p"));
}
