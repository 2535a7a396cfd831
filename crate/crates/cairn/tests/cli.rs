//! End-to-end runs of the command-line binary: output shapes, exit
//! codes, cache wiring through both the flag and the environment, and
//! the weight-1 flag in reports.

use std::path::Path;
use std::process::Command;

use serde_json::Value as Json;

fn pebble() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_pebble"));
    // Keep the ambient environment from leaking a cache into tests.
    cmd.env_remove("PEBBLE_CACHE");
    cmd
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = pebble().args(args).output().unwrap();
    (
        out.status.code().expect("signal exit"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn run_json(args: &[&str]) -> (i32, Json) {
    let (code, stdout, stderr) = run(args);
    let parsed = serde_json::from_str(&stdout)
        .unwrap_or_else(|e| panic!("bad JSON ({e}): {stdout}{stderr}"));
    (code, parsed)
}

#[test]
fn number_reports_value_and_failing_witness() {
    let (code, v) = run_json(&["number", "--graph", "cycle:5", "--kind", "pi"]);
    assert_eq!(code, 0);
    assert_eq!(v["value"], 5);
    assert_eq!(v["failing_witness"], serde_json::json!([3, 1, 0, 0, 0]));
    assert!(v["fingerprint"].as_str().unwrap().len() > 16);
    assert!(v.get("weight_one_edges").is_none());

    let (code, stdout, _) =
        run(&["number", "--graph", "path:3", "--kind", "pi", "--format", "text"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("value = 4"), "{stdout}");
}

#[test]
fn number_kinds_cover_the_variant_grammar() {
    let (code, v) = run_json(&[
        "number", "--graph", "path:3", "--kind", "pi_t", "--t", "2", "--target", "v2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["value"], 8);

    let (code, v) = run_json(&["number", "--graph", "complete:3", "--kind", "gamma"]);
    assert_eq!(code, 0);
    assert_eq!(v["value"], 5);

    let (code, v) = run_json(&["number", "--graph", "cycle:4", "--kind", "rho_t", "--t", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["value"], 5);

    let (code, v) = run_json(&[
        "number", "--graph", "path:3", "--kind", "pi_dist", "--target", "[0,2,0]",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["value"], 5);

    let (code, v) = run_json(&["number", "--graph", "path:3", "--kind", "rho", "--target", "D_t:1"]);
    assert_eq!(code, 0);
    assert_eq!(v["value"], 2);
}

#[test]
fn reach_round_trips_witness_files() {
    let dir = tempfile::tempdir().unwrap();
    let witness = dir.path().join("w.json");
    let (code, v) = run_json(&[
        "reach",
        "--graph",
        "path:4",
        "--from",
        "[8,0,0,0]",
        "--to",
        "delta:3",
        "--witness",
        witness.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["reachable"], true);
    let file: Json = serde_json::from_str(&std::fs::read_to_string(&witness).unwrap()).unwrap();
    assert_eq!(file["start"], serde_json::json!([8, 0, 0, 0]));
    assert_eq!(file["end"][3], 1);
    assert!(!file["moves"].as_array().unwrap().is_empty());

    let (code, v) = run_json(&["reach", "--graph", "path:4", "--from", "[7,0,0,0]", "--to", "delta:3"]);
    assert_eq!(code, 0);
    assert_eq!(v["reachable"], false);
    assert_eq!(v["witness"], Json::Null);
}

#[test]
fn reach_accepts_set_targets_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let set = dir.path().join("ends.json");
    std::fs::write(&set, "[[2,0,0,0],[0,0,0,2]]").unwrap();
    let (code, v) = run_json(&[
        "reach",
        "--graph",
        "path:4",
        "--from",
        "[0,8,0,0]",
        "--any-of",
        set.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["reachable"], true);
    assert!(v["member_index"].is_u64());
}

#[test]
fn usage_problems_exit_one_and_help_exits_zero() {
    let (code, _, stderr) = run(&["number", "--graph", "cycle:5", "--kind", "bogus"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("unknown kind"), "{stderr}");

    let (code, _, _) = run(&["nonsense"]);
    assert_eq!(code, 1);

    let (code, _, stderr) = run(&["verify", "thm:everything"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("unknown statement"), "{stderr}");

    let (code, _, _) = run(&["--help"]);
    assert_eq!(code, 0);
}

#[test]
fn budget_exhaustion_exits_two() {
    let (code, _, stderr) =
        run(&["number", "--graph", "cycle:9", "--kind", "pi", "--budget", "10"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("budget"), "{stderr}");

    let (code, v) = run_json(&[
        "conjecture", "--kind", "graham", "--graph", "cycle:6", "--graph2", "path:3",
        "--budget", "50",
    ]);
    assert_eq!(code, 2);
    assert_eq!(v["outcome"], "too-large");
    assert_eq!(v["holds"], Json::Null);
}

#[test]
fn verify_statements_report_both_sides() {
    let (code, v) = run_json(&["verify", "prop:2s", "--graph", "path:3", "--vertex", "v2", "--t", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["lhs"], 8);
    assert_eq!(v["rhs"], 8);
    assert_eq!(v["holds"], true);
    assert!(v["witnesses"]["lhs"].is_array());

    let (code, v) = run_json(&["verify", "prop:st", "--graph", "complete:3", "--vertex", "0", "--s", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["holds"], true);

    let (code, v) = run_json(&[
        "verify", "thm:doubling", "--graph", "path:2", "--graph2", "path:3", "--x", "1", "--y", "2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["holds"], true);
    assert_eq!(v["lhs"], 16);
    assert_eq!(v["rhs"]["via_first_factor"], 16);
    assert_eq!(v["rhs"]["via_second_factor"], 16);

    let (code, v) = run_json(&["verify", "prop:g_of_p", "--n", "6", "--i", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["lhs"], 11);
    assert_eq!(v["holds"], true);
    assert_eq!(v["critical_blocked"], true);

    let (code, v) = run_json(&["verify", "prop:g_of_p", "--n", "2", "--i", "0"]);
    assert_eq!(code, 0);
    assert_eq!(v["excluded"], true);
}

#[test]
fn conjecture_reports_instances_and_classifies_violations() {
    let (code, v) = run_json(&[
        "conjecture", "--kind", "graham", "--graph", "path:2", "--graph2", "path:3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["outcome"], "holds");
    assert_eq!(v["lhs"], 8);
    assert_eq!(v["rhs"], 8);

    let (code, v) = run_json(&[
        "conjecture", "--kind", "rho-analog", "--graph", "path:2", "--graph2", "path:3",
        "--sg", "S_t:2", "--sh", "S_t:1",
    ]);
    assert_eq!(code, 0, "expected violations to be ordinary results");
    assert_eq!(v["outcome"], "violation");
    assert_eq!(v["classification"], "expected");
    assert_eq!(v["paranoid_confirmed"], true);
    assert_eq!(v["lhs"], 7);
    assert_eq!(v["rhs"], 3);
}

#[test]
fn sweeps_summarize_and_seed_their_reports() {
    let (code, v) = run_json(&[
        "sweep", "--left", "path:2,path:3", "--right", "path:2", "--kinds", "graham",
        "--seed", "9",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["seed"], 9);
    assert_eq!(v["holds"], 2);
    assert_eq!(v["violations"], 0);
    assert_eq!(v["instances"].as_array().unwrap().len(), 2);
}

#[test]
fn repro_confirms_the_stock_claims() {
    let (code, v) = run_json(&["repro"]);
    assert_eq!(code, 0);
    assert_eq!(v["pass"], true);
    assert_eq!(v["claims"].as_array().unwrap().len(), 5);
}

#[test]
fn cache_flag_beats_environment_and_entries_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let flagged = dir.path().join("flag.jsonl");
    let fallback = dir.path().join("env.jsonl");
    let args =
        ["number", "--graph", "cycle:6", "--kind", "pi", "--cache", flagged.to_str().unwrap()];
    let out = pebble()
        .args(args)
        .env("PEBBLE_CACHE", fallback.to_str().unwrap())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(flagged.exists(), "flag path ignored");
    assert!(!fallback.exists(), "environment path used despite the flag");

    // Without the flag the environment decides; a second identical run
    // answers from the file without growing it.
    let env_run = |()| {
        pebble()
            .args(["number", "--graph", "cycle:6", "--kind", "pi"])
            .env("PEBBLE_CACHE", fallback.to_str().unwrap())
            .output()
            .unwrap()
    };
    let first = env_run(());
    assert_eq!(first.status.code(), Some(0));
    let lines = |p: &Path| std::fs::read_to_string(p).unwrap().lines().count();
    assert_eq!(lines(&fallback), 1);
    let second = env_run(());
    assert_eq!(second.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(lines(&fallback), 1);
}

#[test]
fn corrupt_cache_entries_trip_the_inconsistency_exit() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.jsonl");
    let args = ["number", "--graph", "path:3", "--kind", "pi", "--cache", cache.to_str().unwrap()];
    let (code, _, _) = run(&args);
    assert_eq!(code, 0);
    // Rewrite the stored quantifier so the entry no longer matches the
    // query that produced it.
    let poisoned = std::fs::read_to_string(&cache).unwrap().replace("pi-set", "rho-set");
    std::fs::write(&cache, poisoned).unwrap();
    let (code, _, stderr) = run(&args);
    assert_eq!(code, 3, "{stderr}");
    assert!(stderr.contains("quantifier"), "{stderr}");
}

#[test]
fn unit_weight_edges_are_flagged_in_reports() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("unit.json");
    std::fs::write(&file, r#"{"n":2,"edges":[[0,1,1]]}"#).unwrap();
    let (code, v) = run_json(&["number", "--graph", file.to_str().unwrap(), "--kind", "pi"]);
    assert_eq!(code, 0);
    assert_eq!(v["weight_one_edges"], true);
    assert_eq!(v["value"], 1);

    let (code, stdout, _) = run(&[
        "reach",
        "--graph",
        file.to_str().unwrap(),
        "--from",
        "[1,0]",
        "--to",
        "delta:1",
        "--format",
        "text",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("weight-1"), "{stdout}");
}
