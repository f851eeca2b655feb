//! End-to-end tests of the command-line interface: output formats, exit
//! codes, and determinism across worker counts.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_galois-points"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

#[test]
fn verify_passes_and_exits_zero() {
    let out = run(&["verify", "--theorem", "1", "--q", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS t1.a"));
    assert!(text.contains("PASS t1.c"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn json_output_round_trips() {
    let out = run(&[
        "verify",
        "--theorem",
        "3",
        "--q",
        "5",
        "--gamma",
        "2",
        "--format",
        "json",
        "--deterministic",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let report: galois_points::report::Report = serde_json::from_str(&text).unwrap();
    assert!(report.all_passed());
    // Byte-identical round trip through the schema.
    assert_eq!(format!("{}\n", report.render_json()), text);
}

#[test]
fn deterministic_output_is_stable_across_worker_counts() {
    let a = run(&[
        "verify", "--theorem", "2", "--q", "7", "--deterministic", "--workers", "1",
    ]);
    let b = run(&[
        "verify", "--theorem", "2", "--q", "7", "--deterministic", "--workers", "4",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bad_parameters_exit_two() {
    // gamma outside the theorem hypothesis
    let out = run(&["verify", "--theorem", "3", "--q", "5", "--gamma", "1"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown theorem
    let out = run(&["verify", "--theorem", "9", "--q", "5"]);
    assert_eq!(out.status.code(), Some(2));
    // not a prime power
    let out = run(&["verify", "--theorem", "1", "--q", "6"]);
    assert_eq!(out.status.code(), Some(2));
    // even characteristic
    let out = run(&["verify", "--theorem", "1", "--q", "8"]);
    assert_eq!(out.status.code(), Some(2));
    // gamma on a curve without a parameter
    let out = run(&["verify", "--theorem", "1", "--q", "5", "--gamma", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_refusal_exits_four() {
    let out = run(&[
        "enumerate", "--curve", "c3", "--q", "9", "--gamma", "3", "--kind", "outer",
        "--ext", "2", "--budget-points", "100",
    ]);
    assert_eq!(out.status.code(), Some(4));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("budget"));
}

#[test]
fn truncated_search_exits_five() {
    let out = run(&["search-pairs", "--q", "5", "--max-order", "4", "--budget-pairs", "10"]);
    assert_eq!(out.status.code(), Some(5));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("TRUNCATED"));
}

#[test]
fn zero_time_budget_truncates() {
    let out = run(&["verify", "--theorem", "3", "--q", "5", "--budget-seconds", "0"]);
    assert_eq!(out.status.code(), Some(5));
    assert!(String::from_utf8(out.stdout).unwrap().contains("TRUNCATED"));
}

#[test]
fn enumerate_lists_the_two_galois_points() {
    let out = run(&["enumerate", "--curve", "c1", "--q", "5", "--kind", "inner", "--ext", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("decision=galois"));
    assert!(text.contains("2 of"));
}

#[test]
fn inspect_and_field_info_smoke() {
    let out = run(&["inspect", "flexes", "--curve", "c3", "--q", "5", "--gamma", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("flex.count | number of flexes | 4"));

    let out = run(&["inspect", "multiplicity", "--curve", "c1", "--q", "5", "--point", "0:0:1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("| 2"));

    let out = run(&["field-info", "--q", "3^2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("# q = 9"));

    // off-curve point is a parameter error
    let out = run(&["inspect", "multiplicity", "--curve", "c1", "--q", "5", "--point", "1:1:1"]);
    assert_eq!(out.status.code(), Some(2));
}
