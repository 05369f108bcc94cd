use std::io::Write;
use std::process::{Command, Stdio};

use motive_forge::cli::execute;
use motive_forge::format::class_from_str;
use motive_forge::n0_odd;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("motive-forge").chain(args.iter().copied());
    let code = execute(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_motive-forge"))
}

#[test]
fn n0_odd_text() {
    let (code, out, _) = run(&["moduli", "n0", "--genus", "2", "--parity", "odd", "--format", "text"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1 + L + λ1·L + L^2 + L^3\n");
}

#[test]
fn n0_odd_json_round_trips() {
    let (code, out, _) = run(&["moduli", "n0", "--genus", "3", "--parity", "odd"]);
    assert_eq!(code, 0);
    assert_eq!(class_from_str(&out).unwrap(), n0_odd(3).unwrap());
    let (_, again, _) = run(&["moduli", "n0", "--genus", "3", "--parity", "odd", "--degree", "11"]);
    assert_eq!(again, out);
}

#[test]
fn realize_betti_from_stdin() {
    let (_, class, _) = run(&["moduli", "n0", "--genus", "2", "--parity", "odd"]);
    let mut child = bin()
        .args(["realize", "--betti", "--format", "text"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(class.as_bytes()).unwrap();
    let output = child.wait_with_output().unwrap();
    assert!(output.status.success());
    assert_eq!(String::from_utf8(output.stdout).unwrap(), "1 + t^2 + 4t^3 + t^4 + t^6\n");
}

#[test]
fn realize_hodge_from_file_with_levels() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("n0.json");
    let (_, class, _) = run(&["moduli", "n0", "--genus", "2", "--parity", "odd"]);
    std::fs::write(&input, class).unwrap();
    let path = input.to_str().unwrap();
    let (code, out, _) = run(&["realize", "--hodge", "--level", "--input", path, "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("weight,p,q,h\n0,0,0,1\n"));
    assert!(out.contains("3,2,1,2\n"));
    assert!(out.contains("weight,level\n0,0\n2,0\n3,1\n"));
}

#[test]
fn realize_needs_a_kind() {
    let (code, _, err) = run(&["realize"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
    let (code, _, _) = run(&["realize", "--betti", "--hodge"]);
    assert_eq!(code, 2);
}

#[test]
fn verify_macdonald_passes() {
    let (code, out, _) = run(&["verify", "--suite", "macdonald", "--genus-range", "1..3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], true);
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["status"] == "pass"));
}

#[test]
fn verify_moduli_reports_diagnostics_but_exits_zero() {
    let (code, out, _) = run(&["verify", "--suite", "moduli", "--genus-range", "2..2", "--format", "text"]);
    assert_eq!(code, 0);
    assert!(out.contains("DIAGNOSTIC moduli/step3-division g=2: nonterminating"));
}

#[test]
fn even_report_is_deterministic_and_respects_order() {
    let args = ["moduli", "n0", "--genus", "2", "--parity", "even", "--order", "6"];
    let (code, a, _) = run(&args);
    let (_, b, _) = run(&args);
    assert_eq!(code, 0);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["schema"], "pipeline-report/v1");
    let names: Vec<&str> = v["stages"].as_array().unwrap().iter().map(|s| s["name"].as_str().unwrap()).collect();
    assert_eq!(&names[..4], ["m_omega", "ss_preimage", "m_omega_s", "n0_stable"]);
}

#[test]
fn order_can_come_from_the_environment() {
    let run_with = |order: Option<&str>| {
        let mut cmd = bin();
        cmd.args(["moduli", "n0", "--genus", "2", "--parity", "even"]);
        match order {
            Some(o) => cmd.env("MOTIVE_FORGE_ORDER", o),
            None => cmd.env_remove("MOTIVE_FORGE_ORDER"),
        };
        cmd.output().unwrap()
    };
    let default = run_with(None);
    let explicit = bin().args(["moduli", "n0", "--genus", "2", "--parity", "even", "--order", "16"]).output().unwrap();
    assert_eq!(default.stdout, explicit.stdout);
    let short = run_with(Some("4"));
    assert!(short.status.success());
    assert_ne!(short.stdout, default.stdout);
    assert_eq!(run_with(Some("many")).status.code(), Some(2));
}

#[test]
fn sym_power_class_and_ranks() {
    let (code, out, _) = run(&["sym-power", "--genus", "2", "-n", "2", "--format", "text"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1 + λ1 + L + λ2 + λ1·L + L^2\n");
    let ranks = r#"{"0":1,"1":4,"2":1}"#;
    let (_, fast, _) = run(&["sym-power", "--genus", "2", "-n", "2", "--ranks", ranks]);
    let (_, slow, _) = run(&["sym-power", "--genus", "2", "-n", "2", "--ranks", ranks, "--bruteforce"]);
    assert_eq!(fast, slow);
    assert_eq!(fast, "{\"schema\":\"graded-ranks/v1\",\"ranks\":{\"0\":1,\"1\":4,\"2\":7,\"3\":4,\"4\":1}}\n");
}

#[test]
fn pairs_and_jacobians() {
    let (code, out, _) = run(&["moduli", "pairs", "--genus", "2", "--degree", "5", "--index", "0", "--format", "text"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1 + L + L^2 + L^3 + L^4 + L^5\n");
    let (code, out, _) = run(&["jacobians", "--genus", "5", "--index", "5"]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"schema\":\"jacobian-decomp/v1\",\"i\":5,\"factors\":[[1,2],[2,1]]}\n");
    let (code, _, err) = run(&["jacobians", "--genus", "2", "--index", "3"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
}

#[test]
fn big_f_modes_and_errors() {
    let (_, s, _) = run(&["big-f", "--genus", "2", "--exps", "0,-1,2", "--mode", "series"]);
    let (_, c, _) = run(&["big-f", "--genus", "2", "--exps", "0,-1,2", "--mode", "closed"]);
    assert_eq!(s, c);
    assert_eq!(run(&["big-f", "--genus", "2", "--exps", "0,0,1"]).0, 2);
    assert_eq!(run(&["big-f", "--genus", "2", "--exps", "0,1"]).0, 2);
}

#[test]
fn out_flag_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("class.txt");
    let (code, out, _) = run(&["moduli", "n0", "--genus", "2", "--parity", "odd", "--format", "text", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert_eq!(std::fs::read_to_string(path).unwrap(), "1 + L + λ1·L + L^2 + L^3\n");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&[]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["moduli", "n0", "--genus", "1", "--parity", "odd"]).0, 2);
    assert_eq!(run(&["verify", "--genus-range", "3..1"]).0, 2);
    assert_eq!(run(&["realize", "--betti", "--input", "/nonexistent/file"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}
