use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn optbch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_optbch"))
        .args(args)
        .env_remove("OPTBCH_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn schema() -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/certificate.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).expect("schema compiles")
}

fn assert_valid(validator: &jsonschema::Validator, doc: &Value) {
    let errors: Vec<String> = validator.iter_errors(doc).map(|e| format!("{e} at {}", e.instance_path)).collect();
    assert!(errors.is_empty(), "{errors:#?}");
}

#[test]
fn hamming_code_is_perfect() {
    let out = optbch(&["analyze", "--n", "7", "--delta", "3"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("[7, 4, 3]"), "{text}");
    assert!(text.contains("perfect"), "{text}");
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(exit_code(&optbch(&["analyze", "--n", "8", "--delta", "3"])), 2);
    assert_eq!(exit_code(&optbch(&["analyze", "--delta", "3"])), 2);
    assert_eq!(exit_code(&optbch(&["no-such-command"])), 2);
    assert_eq!(exit_code(&optbch(&["table1", "--horizon", "1"])), 2);
}

#[test]
fn unresolved_distance_exits_with_three_unless_forced() {
    let args = ["analyze", "--n", "255", "--delta", "21", "--max-enum-dim", "0", "--budget", "0"];
    let out = optbch(&args);
    assert_eq!(exit_code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("--force"));
    let mut forced = args.to_vec();
    forced.push("--force");
    assert_eq!(exit_code(&optbch(&forced)), 0);
}

#[test]
fn oversized_coset_listing_exits_with_three() {
    assert_eq!(exit_code(&optbch(&["cosets", "--n", "2097151"])), 3);
}

#[test]
fn starved_reproduction_exits_with_one() {
    let out = optbch(&["reproduce-paper", "--max-enum-dim", "0", "--budget", "0"]);
    assert_eq!(exit_code(&out), 1);
    assert!(stdout(&out).lines().any(|l| l.starts_with("FAIL ")));
}

#[test]
fn reproduction_passes_and_ignores_worker_count() {
    let one = optbch(&["reproduce-paper", "--json", "--workers", "1"]);
    let four = optbch(&["reproduce-paper", "--json", "--workers", "4"]);
    assert_eq!(exit_code(&one), 0);
    assert_eq!(exit_code(&four), 0);
    assert_eq!(one.stdout, four.stdout);
    for line in stdout(&one).lines() {
        let row: Value = serde_json::from_str(line).unwrap();
        assert_eq!(row["pass"], Value::Bool(true), "{line}");
    }
}

#[test]
fn certificates_match_the_schema() {
    let validator = schema();
    let cases: [&[&str]; 4] = [
        &["certify", "--n", "7", "--delta", "3"],
        &["certify", "--family", "type1", "--s", "2", "--variant", "d3b1", "--extended"],
        &["certify", "--family", "type3", "--s", "4", "--variant", "d5b1"],
        &["certify", "--n", "255", "--delta", "21", "--max-enum-dim", "0", "--budget", "0", "--force"],
    ];
    for args in cases {
        let out = optbch(args);
        assert_eq!(exit_code(&out), 0, "{args:?}");
        let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_valid(&validator, &doc);
    }

    let out = optbch(cases[1]);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["measured"]["n"], 52);
    assert_eq!(doc["measured"]["k"], 43);
    assert_eq!(doc["verdicts"]["optimal"], true);
    assert_eq!(doc["bounds"]["redundancy_power"], "512");

    let mut broken = doc.clone();
    broken["bounds"]["redundancy_power"] = Value::from(512);
    assert!(!validator.is_valid(&broken));
    let mut extra = doc;
    extra["note"] = Value::from("x");
    assert!(!validator.is_valid(&extra));
}

#[test]
fn threshold_table_has_nine_rows() {
    let out = optbch(&["table1", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let rows: Vec<Value> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 9);
    let got: Vec<u64> = rows.iter().map(|r| r["s_empirical"].as_u64().unwrap()).collect();
    assert_eq!(got, [3, 4, 6, 8, 11, 14, 17, 20, 23]);
    let ells: Vec<u64> = rows.iter().map(|r| r["ell"].as_u64().unwrap()).collect();
    assert_eq!(ells, (2..=10).collect::<Vec<_>>());
}

#[test]
fn coset_tables_are_cached() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_optbch"))
            .args(["cosets", "--family", "type3", "--s", "4", "--json"])
            .env("OPTBCH_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    assert_eq!(exit_code(&first), 0);
    let cache = dir.path().join("cosets-85.json");
    assert!(cache.exists());
    let doc: Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(doc["n"], 85);
    assert_eq!(doc["ord"], 8);
    assert_eq!(doc["leader_check"]["pass"], true);
    let members: u64 = doc["cosets"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["members"].as_array().unwrap().len() as u64)
        .sum();
    assert_eq!(members, 85);

    // A second run reads the cache instead of recomputing.
    let cached: Vec<Value> = serde_json::from_str(&std::fs::read_to_string(&cache).unwrap()).unwrap();
    let truncated = serde_json::to_string(&cached[..2]).unwrap();
    std::fs::write(&cache, truncated).unwrap();
    let second = run();
    let doc: Value = serde_json::from_slice(&second.stdout).unwrap();
    assert_eq!(doc["count"], 2);

    // An unreadable cache file is ignored.
    std::fs::write(&cache, "not json").unwrap();
    let third = run();
    let doc: Value = serde_json::from_slice(&third.stdout).unwrap();
    assert_eq!(doc["count"], cached.len());
}

#[test]
fn construct_reports_dimension() {
    let out = optbch(&["construct", "--family", "type2", "--s", "3", "--variant", "d3b1", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["n"], 73);
    assert_eq!(doc["dimension"], 64);
}
