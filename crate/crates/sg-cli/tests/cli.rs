//! End-to-end checks of the `sg` binary: output formats, exit codes and
//! determinism.

use std::io::Write;
use std::process::{Command, Output, Stdio};

const FIG: &str = "a1: a & b => c @ 0.8\na2: T => a @ 0.9\na3: T => b @ 0.6\na4: d => ~a @ 0.7\n";

fn sg(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sg"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .as_mut()
        .expect("piped stdin")
        .write_all(stdin.as_bytes())
        .expect("stdin accepts input");
    child.wait_with_output().expect("binary finishes")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn eval_prints_sorted_strengths() {
    let output = sg(&["eval", "--semantics", "dc-dfquad"], FIG);
    assert!(output.status.success());
    let text = stdout(&output);
    let first = text.lines().next().unwrap();
    assert!(first.starts_with("a1 0.87"), "got {first}");
    assert!(text.lines().any(|l| l == "a4 0.7"));
    assert!(output.stderr.is_empty());

    let output = sg(&["eval", "--semantics", "tnorm-p"], FIG);
    let text = stdout(&output);
    assert!(
        text.lines().next().unwrap().starts_with("a1 0.432"),
        "got {text}"
    );
}

#[test]
fn eval_handles_empty_input() {
    let output = sg(&["eval", "--semantics", "qem"], "");
    assert!(output.status.success());
    assert!(stdout(&output).is_empty());
}

#[test]
fn eval_json_carries_the_expected_strength() {
    let output = sg(
        &["eval", "--semantics", "dc-dfquad", "--format", "json"],
        FIG,
    );
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    let first = &parsed["statements"][0];
    assert_eq!(first["id"], "a1");
    let strength = first["strength"].as_f64().unwrap();
    assert!((strength - 0.877).abs() <= 0.001, "got {strength}");
}

#[test]
fn eval_is_deterministic() {
    let a = sg(&["eval", "--semantics", "dc-qem", "--format", "json"], FIG);
    let b = sg(&["eval", "--semantics", "dc-qem", "--format", "json"], FIG);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn parse_errors_exit_one_with_spans_on_stderr() {
    let output = sg(&["eval", "--semantics", "qem"], "x: a & ~a => b @ 0.5\n");
    assert_eq!(output.status.code(), Some(1));
    assert!(stdout(&output).is_empty());
    let diagnostics = String::from_utf8_lossy(&output.stderr).into_owned();
    assert!(diagnostics.contains("1:4"), "got {diagnostics}");
}

#[test]
fn cycles_exit_two() {
    let output = sg(
        &["eval", "--semantics", "qem"],
        "x: b => a @ 0.5\ny: a => b @ 0.5\n",
    );
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn unknown_names_exit_three() {
    let output = sg(&["eval", "--semantics", "bogus"], FIG);
    assert_eq!(output.status.code(), Some(3));
    let output = sg(
        &[
            "fuzz",
            "--property",
            "bogus",
            "--semantics",
            "qem",
            "--trials",
            "1",
        ],
        "",
    );
    assert_eq!(output.status.code(), Some(3));
}

#[test]
fn classify_walks_the_three_stages() {
    let base = "ap1: b => a @ 0.5\nap2: c => b @ 0.5\nap3: d => b @ 0.5\n";
    let output = sg(&["classify"], base);
    assert!(stdout(&output).contains("ap1 incomplete"));
    let output = sg(&["classify"], &format!("{base}ap4: T => c @ 0.5\n"));
    assert!(stdout(&output).contains("ap1 partially-complete"));
    let output = sg(
        &["classify"],
        &format!("{base}ap4: T => c @ 0.5\nap5: T => d @ 0.5\n"),
    );
    assert!(stdout(&output).contains("ap1 complete"));
}

#[test]
fn export_produces_dot_and_json() {
    let output = sg(&["export", "--format", "dot"], FIG);
    let dot = stdout(&output);
    assert!(dot.contains("a4 -> a1 [label=\"-\""));
    let output = sg(
        &["export", "--format", "dot", "--semantics", "dc-dfquad"],
        FIG,
    );
    assert!(stdout(&output).contains("s="));

    let output = sg(&["export", "--format", "json"], FIG);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(parsed["statements"].as_array().unwrap().len(), 4);

    let output = sg(&["export", "--format", "dot"], "");
    assert_eq!(stdout(&output), "digraph statement_graph {\n}\n");

    let output = sg(&["export", "--format", "text"], FIG);
    assert!(stdout(&output).starts_with("a1: a & b => c @ 0.8\n"));
}

#[test]
fn props_runs_the_fixture_suite() {
    let output = sg(&["props", "--fixtures"], "");
    assert!(output.status.success(), "{}", stdout(&output));
    let text = stdout(&output);
    assert!(text.contains("pass"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn fuzz_reports_violations_with_witnesses() {
    let output = sg(
        &[
            "fuzz",
            "--property",
            "stability",
            "--semantics",
            "tnorm-p",
            "--trials",
            "20",
            "--seed",
            "42",
        ],
        "",
    );
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("violations"), "got {text}");
    assert!(text.contains("first witness"), "got {text}");
}

#[test]
fn matrix_renders_a_full_grid() {
    let output = sg(&["matrix", "--trials", "3", "--seed", "42"], "");
    assert!(output.status.success());
    let text = stdout(&output);
    assert_eq!(text.lines().count(), 18);
    assert!(text.contains("mirroring"));

    let output = sg(
        &[
            "matrix", "--trials", "3", "--seed", "42", "--format", "json",
        ],
        "",
    );
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(parsed["rows"].as_array().unwrap().len(), 6);
}
