use std::io::Write;
use std::process::{Command, Output, Stdio};

use goodcubic::{Certificate, OracleJson, Refusal, ReportJson};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_goodcubic"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_decompose_verify_pipeline() {
    let g6 = run(&["gen", "--family", "necklace", "--k", "7"], "");
    assert!(g6.status.success());
    let cert = run(&["decompose"], &stdout(&g6));
    assert!(cert.status.success());
    let parsed: Certificate = serde_json::from_str(&stdout(&cert)).unwrap();
    assert_eq!(parsed.n, 28);
    let report = run(&["verify"], &stdout(&cert));
    assert_eq!(report.status.code(), Some(0));
    let r: ReportJson = serde_json::from_str(&stdout(&report)).unwrap();
    assert!(r.pass && r.failures.is_empty());
}

#[test]
fn verify_reports_broken_certificate() {
    let cert = Certificate {
        n: 4,
        edges: vec![[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]],
        labels: ["T", "T", "O", "O", "O", "T"].map(String::from).to_vec(),
    };
    let out = run(&["verify"], &serde_json::to_string(&cert).unwrap());
    assert_eq!(out.status.code(), Some(1));
    let r: ReportJson = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(!r.pass);
    assert!(r.failures.iter().any(|f| f.check == "o-two-regular"));
}

#[test]
fn oracle_on_five_cycle() {
    let c5 = "5\n0 1\n1 2\n2 3\n3 4\n4 0\n";
    let strict = run(&["oracle", "--strict-oracle"], c5);
    assert_eq!(strict.status.code(), Some(1));
    let j: OracleJson = serde_json::from_str(&stdout(&strict)).unwrap();
    assert_eq!((j.outcome.as_str(), j.trees_examined, j.certificate), ("none", 5, None));
    assert_eq!(run(&["oracle"], c5).status.code(), Some(1));
    let relaxed = run(&["oracle", "--strict-oracle=false"], c5);
    assert_eq!(relaxed.status.code(), Some(0));
    let j: OracleJson = serde_json::from_str(&stdout(&relaxed)).unwrap();
    assert_eq!(j.certificate.unwrap().labels.iter().filter(|l| *l == "M").count(), 1);
}

#[test]
fn refuses_graph_with_claw() {
    let k33 = "6 9\n0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n";
    let out = run(&["decompose"], k33);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    let refusal: Refusal = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(refusal.error, "precondition-failed");
    assert!(refusal.message.contains("claw"), "{}", refusal.message);
}

#[test]
fn dot_output_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("prism.txt");
    let g = run(&["gen", "--family", "prism", "--output", "edgelist"], "");
    std::fs::write(&path, g.stdout).unwrap();
    let out = run(&["decompose", "--input", path.to_str().unwrap(), "--output", "dot"], "");
    assert!(out.status.success());
    let dot = stdout(&out);
    assert!(dot.starts_with("graph G {"));
    assert_eq!(dot.matches("style=solid").count(), 5);
    assert_eq!(dot.matches("style=dashed").count(), 1);
    assert_eq!(dot.matches("style=bold").count(), 3);
}

#[test]
fn trace_goes_to_stderr() {
    let g = run(&["gen", "--family", "double-bracelet", "--k", "2", "--j", "2"], "");
    let out = run(&["decompose", "--trace", "--debug-verify"], &stdout(&g));
    assert!(out.status.success());
    let trace = String::from_utf8(out.stderr.clone()).unwrap();
    assert!(!trace.is_empty());
    assert!(serde_json::from_str::<Certificate>(&stdout(&out)).is_ok());
}

#[test]
fn sweep_summary() {
    let mut input = String::new();
    for args in [
        &["gen", "--family", "prism"][..],
        &["gen", "--family", "necklace", "--k", "3"],
        &["gen", "--family", "random-cubic", "--n", "12", "--seed", "5", "--inflate"],
        &["gen", "--family", "random-cubic", "--n", "8", "--seed", "1"],
    ] {
        input.push_str(&stdout(&run(args, "")));
    }
    let out = run(&["sweep"], &input);
    assert_eq!(out.status.code(), Some(0));
    let table = stdout(&out);
    assert_eq!(table.lines().count(), 6);
    assert!(table.lines().last().unwrap().starts_with("total 4"));
    assert!(table.contains("refused"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["decompose", "--output", "graph6"], "").status.code(), Some(2));
    assert_eq!(run(&["gen", "--family", "cube"], "").status.code(), Some(2));
    assert_eq!(run(&[], "").status.code(), Some(2));
}

#[test]
fn missing_generator_parameter() {
    let out = run(&["gen", "--family", "necklace"], "");
    assert_eq!(out.status.code(), Some(1));
    let refusal: Refusal = serde_json::from_slice(&out.stderr).unwrap();
    assert!(refusal.message.contains("--k"));
}
