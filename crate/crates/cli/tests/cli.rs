use std::path::{Path, PathBuf};
use std::process::Command;

use drinfeld_cli::json::{ClassificationJson, GammaEntry, ProbeJson, SolveJson, TableauJson, VerifyJson, WindowJson};
use drinfeld_cli::run_captured;
use tempfile::TempDir;

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

const ONE_SINGULAR: &str = r#"{"n":3,"rows":[["0"],["1/2","-1/2"],["1","0","-1"]]}"#;
const GENERIC: &str = r#"{"n":3,"rows":[["1/5"],["1/3","1/7"],["0","1/2","-1/2"]]}"#;
const ROW_THREE_MINUS_ONE: &str = r#"{"n":2,"rows":[["0"],["3","-1"]]}"#;

fn captured(args: &[&str]) -> (String, i32) {
    let mut argv = vec!["drinfeld"];
    argv.extend_from_slice(args);
    let out = run_captured(argv).unwrap();
    (out.text, out.code)
}

fn binary(args: &[&str], seed_env: Option<&str>) -> (String, i32) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_drinfeld"));
    cmd.args(args).env_remove("GT_SEED");
    if let Some(s) = seed_env {
        cmd.env("GT_SEED", s);
    }
    let out = cmd.output().unwrap();
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap())
}

#[test]
fn classify_example() {
    let dir = TempDir::new().unwrap();
    let l = write(dir.path(), "l.json", ONE_SINGULAR);
    let (text, code) = captured(&["classify", "--in", l.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(text, r#"{"kind":"singular","pairs":[[2,1,2]]}"#);
    let parsed: ClassificationJson = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed.pairs, vec![[2, 1, 2]]);
}

#[test]
fn gamma_example_and_csv() {
    let dir = TempDir::new().unwrap();
    let l = write(dir.path(), "l.json", ROW_THREE_MINUS_ONE);
    let l = l.to_str().unwrap();
    assert_eq!(captured(&["gamma", "--in", l, "--m", "2", "--k", "1"]), ("\"3\"".to_string(), 0));
    let (csv, _) = captured(&["gamma", "--in", l, "--format", "csv"]);
    assert_eq!(csv.lines().next(), Some("m,k,value"));
    assert!(csv.lines().any(|line| line == "2,1,3"));
    let (table, _) = captured(&["gamma", "--in", l]);
    let entries: Vec<GammaEntry> = serde_json::from_str(&table).unwrap();
    assert_eq!(entries.len(), 3);
    assert_eq!(serde_json::to_string_pretty(&entries).unwrap(), table);
}

#[test]
fn verify_rank_three() {
    let (text, code) = captured(&["verify", "--n", "3"]);
    assert_eq!(code, 0);
    let report: VerifyJson = serde_json::from_str(&text).unwrap();
    assert!(report.all_pass);
    let labels: Vec<&str> = report.families.iter().map(|f| f.family.as_str()).collect();
    assert_eq!(labels, ["i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix"]);
    assert!(report.families.iter().all(|f| f.pass && f.instances > 0));
}

#[test]
fn gens_output() {
    let (text, code) = captured(&["gens", "--n", "2", "--kind", "b"]);
    assert_eq!(code, 0);
    assert!(text.contains("\"E12\""));
    assert_eq!(binary(&["gens", "--n", "2", "--kind", "x"], None).1, 2);
}

#[test]
fn window_and_solve_round_trip() {
    let dir = TempDir::new().unwrap();
    let l = write(dir.path(), "l.json", GENERIC);
    let l = l.to_str().unwrap();
    let (text, _) = captured(&["window", "--in", l, "--radius", "1"]);
    let w: WindowJson = serde_json::from_str(&text).unwrap();
    assert_eq!(w.vertices.len(), 7);
    assert_eq!(serde_json::to_string_pretty(&w).unwrap(), text);
    let root: TableauJson = serde_json::from_str(GENERIC).unwrap();
    assert_eq!(w.root, root);

    let (text, code) = captured(&["solve", "--in", l, "--radius", "2", "--tree", "random", "--seed", "4"]);
    assert_eq!(code, 0);
    let s: SolveJson = serde_json::from_str(&text).unwrap();
    assert!(s.verified);
    assert_eq!(s.tree, "random:4");
    assert!(s.window.edges.iter().all(|e| e.scalar.is_some()));
    assert_eq!(serde_json::to_string_pretty(&s).unwrap(), text);
}

#[test]
fn reduce_word_and_probe() {
    let dir = TempDir::new().unwrap();
    let l = write(dir.path(), "l.json", r#"{"n":2,"rows":[["1/3"],["2","-1"]]}"#);
    let l = l.to_str().unwrap();
    let (text, code) = captured(&["reduce", "--in", l, "--word", "b1.1 c1.1"]);
    assert_eq!(code, 0);
    // −(2 − 1/3)(−1 − 1/3)
    assert!(text.contains("\"scalar\": \"20/9\""), "{text}");
    let (text, code) = captured(&["reduce", "--in", l, "--samples", "20", "--seed", "9"]);
    assert_eq!(code, 0);
    let p: ProbeJson = serde_json::from_str(&text).unwrap();
    assert!(p.pass && p.samples == 20 && p.seed == 9);
}

#[test]
fn orbit_command() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.json", ONE_SINGULAR);
    let b = write(dir.path(), "b.json", r#"{"n":3,"rows":[["4"],["-1/2","11/2"],["-1","1","0"]]}"#);
    let (text, _) = captured(&["orbit", "--in", a.to_str().unwrap(), "--other", b.to_str().unwrap()]);
    assert!(text.contains("true"));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = write(dir.path(), "bad.json", "{\"n\": 2, \"rows\": [");
    let critical = write(dir.path(), "crit.json", r#"{"n":3,"rows":[["0"],["1/2","1/2"],["1","0","-1"]]}"#);
    let zero = write(dir.path(), "zero.json", r#"{"n":2,"rows":[["2"],["2","-1"]]}"#);
    assert_eq!(binary(&["classify", "--in", bad.to_str().unwrap()], None).1, 2);
    assert_eq!(binary(&["window", "--in", critical.to_str().unwrap()], None).1, 2);
    assert_eq!(binary(&["solve", "--in", zero.to_str().unwrap()], None).1, 2);
    assert_eq!(binary(&["classify", "--in", critical.to_str().unwrap()], None).1, 0);
    assert_eq!(binary(&["verify", "--n", "9"], None).1, 2);
    assert_eq!(binary(&["frobnicate"], None).1, 2);
    assert_eq!(binary(&["verify", "--n", "2"], None).1, 0);
    assert_eq!(binary(&["--help"], None).1, 0);
}

#[test]
fn seeds_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let l = write(dir.path(), "l.json", GENERIC);
    let l = l.to_str().unwrap();
    let args = ["reduce", "--in", l, "--samples", "15"];
    let first = binary(&args, Some("21"));
    assert_eq!(first, binary(&args, Some("21")));
    assert_eq!(first.0, binary(&[&args[..], &["--seed", "21"]].concat(), None).0);
    assert_ne!(first.0, binary(&args, Some("22")).0);
    assert_eq!(binary(&args, Some("nope")).1, 2);
}

#[test]
fn out_flag_writes_file() {
    let dir = TempDir::new().unwrap();
    let l = write(dir.path(), "l.json", ONE_SINGULAR);
    let target = dir.path().join("out.json");
    let (stdout, code) = binary(&["classify", "--in", l.to_str().unwrap(), "--out", target.to_str().unwrap()], None);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let written = std::fs::read_to_string(target).unwrap();
    assert_eq!(written.trim_end(), r#"{"kind":"singular","pairs":[[2,1,2]]}"#);
}
