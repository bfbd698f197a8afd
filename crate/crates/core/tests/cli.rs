mod common;

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use common::{fixture_text, fixtures_dir};
use oneplanar::format::{parse, serialize};
use oneplanar::graph::families;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oneplanar")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    fixtures_dir().join(format!("{name}.opg")).to_string_lossy().into_owned()
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("oneplanar-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

#[test]
fn validate_accepts_fixtures() {
    for name in ["h0", "k2222", "fig1-left"] {
        let o = run(&["validate", &fixture(name)]);
        assert_eq!(o.status.code(), Some(0), "{name}");
        assert!(stdout(&o).starts_with("valid\n"));
    }
}

#[test]
fn validate_reports_violations_by_line() {
    let path = scratch("adjacent.opg", "graph t\nv a\nv b\nv c\ne a b\ne a c\nx a b a c\nend\n");
    let o = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.starts_with("invalid\n"));
    assert!(out.contains("violation adjacent-edge-crossing line 7 a b a c"), "{out}");
    let o = run(&["audit", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 7: adjacent-edge-crossing"));
}

#[test]
fn malformed_input_exits_with_two() {
    let path = scratch("loop.opg", "graph t\nv a\ne a a\nend\n");
    let o = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3: "));
    assert_eq!(run(&["validate", "/nonexistent/file.opg"]).status.code(), Some(2));
    let o = run(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("Usage"));
    assert_eq!(run(&["gen", "gk"]).status.code(), Some(2));
}

#[test]
fn oracle_refutes_k7() {
    let k7 = families::complete(7);
    let path = scratch("k7.g", &serialize("k7", &k7, None));
    let o = run(&["oracle", path.to_str().unwrap(), "--max-crossings", "10"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("refuted\n"));
}

#[test]
fn oracle_witness_is_a_valid_file() {
    let path = scratch("k6.g", &serialize("k6", &families::complete(6), None));
    let out = scratch("k6-drawing.opg", "");
    let o = run(&["oracle", path.to_str().unwrap(), "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("witness\nnodes "));
    let file = parse(&fs::read_to_string(&out).unwrap()).unwrap();
    assert!(file.drawing.is_some());
    let o = run(&["oracle", path.to_str().unwrap(), "--node-limit", "2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).starts_with("budget-exceeded\n"));
}

#[test]
fn bounds_prints_the_ledger() {
    let o = run(&["bounds"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l == "11 40 39 false"), "{out}");
    assert!(out.lines().any(|l| l == "10 34 35 true"));
    assert!(out.lines().any(|l| l == "max-degree 10"));
}

#[test]
fn gen_reproduces_shipped_fixtures() {
    for (args, name) in [
        (vec!["gen", "h0"], "h0"),
        (vec!["gen", "h0-chain", "--m", "3"], "h0-chain-3"),
        (vec!["gen", "gk", "--k", "2"], "g2"),
        (vec!["gen", "k2222"], "k2222"),
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), fixture_text(name), "{name}");
    }
    let list = stdout(&run(&["gen", "list"]));
    assert!(list.lines().any(|l| l.starts_with("k2222 vertices 8 edges 24 ")));
}

#[test]
fn analyze_prints_invariants() {
    let o = run(&["analyze", &fixture("fig1-left")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "vertices 10\nedges 32\ndelta 8\nkappa 6\nclaw-free\n");
    let star = scratch("star.g", &serialize("star", &families::star(3), None));
    let out = stdout(&run(&["analyze", star.to_str().unwrap(), "--claw"]));
    assert_eq!(out, "vertices 4\nedges 3\nclaw c l0 l1 l2\n");
}

#[test]
fn audit_exit_codes() {
    let o = run(&["audit", &fixture("fig1-right")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("max-degree-at-most-10 pass")), "{out}");
    assert!(out.lines().any(|l| l == "type-i-4-cycles-nonseparating pass"));
    let o = run(&["audit", &fixture("h0"), "--assume-kappa", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn export_dot_marks_crossings() {
    let o = run(&["export-dot", &fixture("k2222")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("graph \"k2222\" {"));
    assert_eq!(out.matches("shape=diamond").count(), 6);
}

#[test]
fn sweep_reports_no_violations() {
    let o = run(&["sweep", "--count", "20", "--max-n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.ends_with("violations 0\n"), "{out}");
}
