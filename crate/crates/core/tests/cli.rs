use std::process::Command;

use planarlab::cli::{run, EXIT_CAPACITY, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("planarlab").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out, err) = call(args);
    let doc = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out:?} {err:?}"));
    (code, doc)
}

#[test]
fn envelope_fields() {
    let (code, doc) = json(&["field-info", "--r", "3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["tool"], "planarlab");
    assert_eq!(doc["command"], "field-info");
    assert_eq!(doc["r"], 3);
    assert_eq!(doc["modulus"], "1011");
    assert_eq!(doc["config"]["r"], 3);
    assert!(doc["duration_ms"].is_u64());
    assert_eq!(doc["result"]["generator"], "2");
    let (_, doc) = json(&["field-info", "--r", "3", "--no-timing"]);
    assert!(doc.get("duration_ms").is_none());
}

#[test]
fn scan_r8() {
    let (code, doc) = json(&["scan", "--r", "8", "--a-mode", "all", "--no-timing"]);
    assert_eq!(code, EXIT_OK);
    let res = &doc["result"];
    assert_eq!(res["theorem_consistent"], true);
    assert_eq!(res["planar_t_all_a"], serde_json::json!([1, 2, 4]));
    assert_eq!(res["planar_pair_count"], 3 * 255);
}

#[test]
fn scan_csv_has_one_row_per_pair() {
    let (code, out, _) = call(&["scan", "--r", "4", "--t", "1..6", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "t,a,planar,witness_b,witness_c1,witness_c2");
    assert_eq!(lines.len(), 1 + 6 * 15);
    assert!(lines[1].starts_with("1,1,true,"));
    assert!(lines.iter().any(|l| l.starts_with("3,1,false,2,")));
}

#[test]
fn sampled_scan_echoes_seed() {
    let (code, doc) = json(&["scan", "--r", "10", "--t", "1..4", "--a", "sample:16:42", "--no-timing"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(doc["config"]["a"], "sample:16:42");
    assert_eq!(doc["result"]["seed"], 42);
    assert_eq!(doc["result"]["a_count"], 16);
}

#[test]
fn single_shot_commands() {
    let (code, doc) = json(&["planar-test", "--r", "8", "--t", "3", "--a", "1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(doc["result"]["planar"], false);
    assert_eq!(doc["result"]["failing_b"].as_array().unwrap().len(), 1);

    let (code, doc) = json(&["capelli", "--r", "4", "--t", "6", "--a", "1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(doc["result"]["abs_irreducible"], true);

    let (code, doc) = json(&["build-h", "--r", "3", "--t", "3", "--a", "1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(doc["result"]["g"], "1,1");

    let (code, doc) = json(&["counterexamples", "--curve", "first"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(doc["result"]["counts"][0]["points"], 2);

    let (code, doc) = json(&["threshold", "--t", "3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(doc["result"]["min_r"], 2);

    let (code, doc) = json(&["chain-check", "--t", "5"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(doc["result"]["at_t4"], 573);

    let (code, doc) = json(&["weil-check", "--r", "4", "--t", "3", "--a", "1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(doc["result"]["satisfied"], true);

    let (code, doc) = json(&["count-points", "--r", "1", "--form", "1,1,1:1;0,3,0:1;0,2,1:1;0,0,3:1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(doc["result"]["projective_points"], 2);

    let (code, doc) = json(&["count-points", "--r", "3", "--poly", "1,0:1;0,1:1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(doc["result"]["n"], 8);

    let (code, doc) = json(&["census", "--r", "1", "--t", "5"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(doc["result"]["reducible_shifts"], serde_json::json!(["0", "1"]));

    let (code, doc) = json(&["rds-verify", "--r", "2", "--t", "2", "--a", "1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(doc["result"]["valid"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["field-info", "--r", "30"]).0, EXIT_USAGE);
    assert_eq!(call(&["bogus"]).0, EXIT_USAGE);
    assert_eq!(call(&["planar-test", "--r", "4", "--t", "3", "--a", "zz"]).0, EXIT_USAGE);
    assert_eq!(call(&["planar-test", "--r", "4", "--t", "3", "--a", "1f"]).0, EXIT_USAGE);
    assert_eq!(call(&["capelli", "--r", "4", "--t", "4", "--a", "1"]).0, EXIT_USAGE);
    assert_eq!(call(&["field-info", "--r", "4", "--format", "csv"]).0, EXIT_USAGE);
    assert_eq!(call(&["rds-verify", "--r", "10", "--t", "2", "--a", "1"]).0, EXIT_CAPACITY);
    assert_eq!(call(&["census", "--r", "3", "--t", "12", "--ext", "4"]).0, EXIT_CAPACITY);
    assert_eq!(call(&["--help"]).0, EXIT_OK);
}

#[test]
fn binary_output_is_independent_of_worker_count() {
    let bin = env!("CARGO_BIN_EXE_planarlab");
    let outputs: Vec<Vec<u8>> = ["1", "4", "1"]
        .iter()
        .map(|w| {
            let out = Command::new(bin)
                .args(["scan", "--r", "6", "--t", "1..9", "--a", "all", "--no-timing"])
                .env("PLANARLAB_WORKERS", w)
                .output()
                .unwrap();
            assert!(out.status.success());
            out.stdout
        })
        .collect();
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
}
