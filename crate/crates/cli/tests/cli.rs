use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ninecong")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const E47775: &str = "short:[-41489280,102867483600]";

#[test]
fn model_prints_both_forms() {
    let out = run(&["model", "--curve", "short:[-1,0]", "--sign", "reverse"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["sign"], "reverse");
    assert_eq!(v["variables"], serde_json::json!(["x", "y", "z", "t"]));
    assert!(v["f1"].as_str().unwrap().contains("z^3"));
}

#[test]
fn model_needs_a_short_curve() {
    let out = run(&["model", "--curve", "[0,-1,1,-10,-20]"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn forget_gives_a_curve() {
    let out = run(&["forget", "--curve", E47775, "--point", "2520473760,0,0,0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["s"], "0");
    assert!(v["congruent_curve"].as_str().unwrap().starts_with("[0,0,0,"));
}

#[test]
fn forget_rejects_points_off_the_model() {
    let out = run(&["forget", "--curve", E47775, "--point", "1,1,1,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let ok = run(&[
        "verify",
        "--e1",
        "[1,1,0,-2700,54000]",
        "--e2",
        "[1,1,0,-10472207700,-455228489646000]",
        "--bound",
        "200",
    ]);
    assert_eq!(ok.status.code(), Some(0));
    let v = json(&ok);
    assert_eq!(v["all_congruent"], true);
    assert_eq!(v["isogeny_excluded"], 11);

    let bad = run(&["verify", "--e1", "[0,-1,1,-10,-20]", "--e2", "[0,0,1,-1,0]", "--bound", "200"]);
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(json(&bad)["all_congruent"], false);

    let capped = run(&["verify", "--e1", "[0,-1,1,-10,-20]", "--e2", "[0,0,1,-1,0]", "--bound", "200000"]);
    assert_eq!(capped.status.code(), Some(2));
}

#[test]
fn local_reports_no_seven_adic_points() {
    let out = run(&["local", "--curve", E47775, "--sign", "reverse", "-p", "7", "--depth", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"], "no_points_to_depth");
    assert_eq!(v["summary"], "no Q_7-point found to depth 3");

    let bad = run(&["local", "--curve", E47775, "-p", "8"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn search_without_matrix_uses_the_original_forms() {
    let out = run(&["search", "--curve", "short:[-1,0]", "--height", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["transformed"], false);
    assert_eq!(v["height"], 1);
}

#[test]
fn surface_specialization() {
    let out = run(&["surface", "--sign", "reverse", "--specialize", "2", "--multiples", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["specialization"]["fiber"], "[102,-2583,133,0,0]");
    assert_eq!(v["specialization"]["multiples"][1], serde_json::json!(["2583", "-263599"]));
    assert_eq!(v["specialization"]["infinite_order_certificate"], false);

    let full = run(&["surface", "--sign", "direct", "--specialize", "4"]);
    assert_eq!(json(&full)["specialization"]["infinite_order_certificate"], true);
}

#[test]
fn reproduce_cases() {
    let out = run(&["reproduce", "--case", "triple-27606"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["passed"], true);

    let unprinted = run(&["reproduce", "--case", "triple-1701"]);
    assert_eq!(unprinted.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&unprinted.stderr).contains("no printed equations"));
}

#[test]
fn verify_paper_skips_modules() {
    let path = std::env::temp_dir().join(format!("ninecong-summary-{}.json", std::process::id()));
    let out = run(&["verify-paper", "--skip", "examples", "--skip", "diophantine", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["counts"]["fail"], 0);
    assert_eq!(v["counts"]["skipped"], 7);
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written, v);
    std::fs::remove_file(&path).ok();
    assert!(String::from_utf8_lossy(&out.stderr).lines().any(|l| l.starts_with("SKIP")));

    let unknown = run(&["verify-paper", "--skip", "nope"]);
    assert_eq!(unknown.status.code(), Some(2));
}
