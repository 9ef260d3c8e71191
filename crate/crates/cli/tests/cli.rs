//! End-to-end runs of the `prismatic` binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_prismatic"))
        .args(args)
        .env_remove("PRISMATIC_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child.stdin.take().unwrap().write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn report(args: &[&str], stdin: Option<&str>) -> Value {
    let mut full: Vec<&str> = args.to_vec();
    full.push("--json");
    let out = run(&full, stdin);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn prism_output_pipes_into_aut() {
    let prism = run(&["prism", "--name", "paley:5"], None);
    assert!(prism.status.success());
    let g6 = String::from_utf8(prism.stdout).unwrap();
    let r = report(&["aut"], Some(&g6));
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["command"], "aut");
    assert_eq!(r["results"]["order"], 120);
    assert_eq!(r["results"]["prism"]["ratio"], 12);
}

#[test]
fn star_prism_cheeger() {
    let r = report(&["cheeger", "--name", "star:4", "--prism"], None);
    assert_eq!(r["results"]["value"], "3/4");
    assert_eq!(r["results"]["witness_verified"], true);
}

#[test]
fn exa1_fixture() {
    let r = report(&["verify-fixture", "exa1"], None);
    let res = &r["results"];
    assert_eq!(res["antimorphism"], true);
    assert_eq!(res["retraction"], true);
    assert_eq!(res["core_is_k5"], true);
    assert_eq!(res["case"]["kind"], "in_first_side");
}

#[test]
fn sweep_to_five_vertices_passes() {
    let out = run(&["sweep", "--max-n", "5", "--threads", "2", "--json"], None);
    assert!(out.status.success());
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["results"]["graphs"], 52);
    assert_eq!(r["results"]["all_pass"], true);
}

#[test]
fn negative_answers_exit_zero() {
    let r = report(&["hamilton", "--name", "petersen", "--mode", "cycle"], None);
    assert_eq!(r["results"]["status"], "not_found");
    let r = report(&["antimorph", "--name", "path:3"], None);
    assert_eq!(r["results"]["self_complementary"], false);
}

#[test]
fn budget_exhaustion_is_reported_in_band() {
    let r = report(&["hamilton", "--name", "petersen", "--budget-nodes", "3"], None);
    assert_eq!(r["results"]["status"], "unknown");
    assert_eq!(r["budget"]["exhausted"], true);
}

#[test]
fn budget_env_var_sets_the_default() {
    let out = Command::new(env!("CARGO_BIN_EXE_prismatic"))
        .args(["hamilton", "--name", "petersen", "--json"])
        .env("PRISMATIC_BUDGET", "3")
        .output()
        .unwrap();
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["budget"]["limit"], 3);
}

#[test]
fn input_errors_exit_nonzero() {
    assert!(!run(&["aut", "--g6", "~~~"], None).status.success());
    assert!(!run(&["aut", "--name", "no_such_graph"], None).status.success());
    assert!(!run(&["aut"], Some("")).status.success());
    assert!(!run(&["cheeger", "--g6", "?", "--prism"], None).status.success());
    assert!(!run(&["verify-fixture", "unknown"], None).status.success());
}

#[test]
fn construct_round_trips_graph6() {
    let out = run(&["construct", "--name", "cycle:5"], None);
    let g6 = String::from_utf8(out.stdout).unwrap();
    let r = report(&["construct", "--g6", g6.trim()], None);
    assert_eq!(r["results"]["regular_degree"], 2);
    assert_eq!(r["input"]["graph6"], g6.trim());
}

#[test]
fn prism_spectrum_closed_form_agrees() {
    let r = report(&["spectrum", "--name", "paley:13", "--prism"], None);
    assert_eq!(r["results"]["closed_form"]["agrees"], true);
}

#[test]
fn every_subcommand_runs_on_a_small_graph() {
    for cmd in ["aut", "antimorph", "core", "classify", "cheeger", "spectrum", "srg", "theta", "hamilton", "invariants"] {
        let r = report(&[cmd, "--name", "cycle:5"], None);
        assert_eq!(r["command"], cmd);
    }
}
