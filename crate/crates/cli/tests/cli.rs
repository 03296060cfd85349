//! End-to-end tests of the `balcox` binary: spawn the real executable,
//! parse its JSON, and check exit codes.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn balcox(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_balcox"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn balcox_json(args: &[&str]) -> Value {
    let out = balcox(args);
    assert!(
        out.status.success(),
        "balcox {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stdout)
    );
    serde_json::from_slice(&out.stdout).expect("output is one JSON object")
}

#[test]
fn balance_reports_the_characteristic_two_witness() {
    let v = balcox_json(&["balance", "--char", "2", "fixtures://two-triangles-disjoint"]);
    assert_eq!(v["balanceable"], Value::Bool(true));
    assert_eq!(v["dim"], 1);
    assert_eq!(v["witness"], serde_json::json!(["1", "1", "1", "1", "1", "1"]));

    let v = balcox_json(&["balance", "fixtures://two-triangles-disjoint"]);
    assert_eq!(v["balanceable"], Value::Bool(false));
    assert_eq!(v["witness"], Value::Null);
}

#[test]
fn minimal_distinguishes_square_from_complete_graph() {
    let v = balcox_json(&["minimal", "fixtures://square"]);
    assert_eq!(v["minimal"], Value::Bool(true));
    assert_eq!(v["dim"], 1);
    let v = balcox_json(&["minimal", "fixtures://k4"]);
    assert_eq!(v["minimal"], Value::Bool(false));
    assert_eq!(v["dim"], 2);
}

#[test]
fn pairings_reproduce_the_negative_intersections() {
    let v = balcox_json(&["pair", "fixtures://F9", "fixtures://class-oct"]);
    assert_eq!(v, serde_json::json!({ "value": -1 }));
    let v = balcox_json(&["pair", "fixtures://F7", "fixtures://class-tri"]);
    assert_eq!(v, serde_json::json!({ "value": -1 }));
}

#[test]
fn class_of_the_square_matches_the_worked_example() {
    let v = balcox_json(&["class", "fixtures://square", "--n", "5"]);
    assert_eq!(v["H"], 2);
    assert_eq!(v["n"], 5);
    let e = v["E"].as_object().unwrap();
    assert_eq!(e.len(), 4);
    for key in ["1", "2", "3", "4"] {
        assert_eq!(e[key], -1);
    }
    // Re-embedding at a larger n brings in pair index sets and the
    // unused label, which misses every edge.
    let v = balcox_json(&["class", "fixtures://square", "--n", "6"]);
    let e = v["E"].as_object().unwrap();
    assert_eq!(e["1,3"], -1);
    assert_eq!(e["5"], -2);
}

#[test]
fn classify_tags_and_irreducibility() {
    let v = balcox_json(&["classify", "--char", "2", "fixtures://two-triangles-disjoint"]);
    assert_eq!(v["tag"], "TwoOddCyclesDisjoint");
    assert_eq!(v["lengths"], serde_json::json!([3, 3]));
    assert_eq!(v["minimal"], Value::Bool(true));
    let v = balcox_json(&["classify", "fixtures://two-triangles-disjoint"]);
    assert_eq!(v["tag"], "NotMinimalPattern");
    assert_eq!(v["witness"], Value::Null);
    let v = balcox_json(&["classify", "fixtures://hexagon"]);
    assert_eq!(v["tag"], "EvenCycle");
    assert_eq!(v["irreducibleDegreeTwo"], Value::Bool(true));
    let v = balcox_json(&["classify", "fixtures://square"]);
    // n = 5 leaves no room for a degree-two irreducibility verdict.
    assert_eq!(v["irreducibleDegreeTwo"], Value::Null);
}

#[test]
fn invariance_and_clear_agree_on_the_octagon() {
    let v = balcox_json(&["invariance", "fixtures://octagon-weighted"]);
    assert_eq!(v["invariant"], Value::Bool(true));
    assert_eq!(v["balanced"], Value::Bool(true));
    assert_eq!(v["nonzeroLayers"], serde_json::json!([0]));

    let cleared = balcox_json(&["clear", "fixtures://octagon-weighted"]);
    assert_eq!(cleared["fromInvariant"], Value::Bool(true));
    let class = balcox_json(&["class", "fixtures://octagon"]);
    assert_eq!(cleared["class"], class);
    assert_eq!(cleared["terms"].as_array().unwrap().len(), 8);
}

#[test]
fn hypertree_checks_degrees_and_enumeration() {
    let v = balcox_json(&["hypertree", "check", "fixtures://hypertree-n6"]);
    assert_eq!(v, serde_json::json!({ "satisfied": true, "violation": null }));

    let v = balcox_json(&["hypertree", "degree", "fixtures://hypertree-n6"]);
    assert_eq!(v["degree"], 3);
    let v = balcox_json(&["hypertree", "degree", "--vertex", "2", "fixtures://hypertree-n6"]);
    assert_eq!(v["degree"], 2);

    let v = balcox_json(&["enumerate-hypertrees", "--n", "6"]);
    assert_eq!(v["count"], 1);
    assert_eq!(
        v["hypertrees"][0]["parts"],
        serde_json::json!([[1, 2, 3], [1, 4, 5], [2, 4, 6], [3, 5, 6]])
    );
    let v = balcox_json(&["enumerate-hypertrees", "--n", "5"]);
    assert_eq!(v["count"], 0);
}

#[test]
fn axiom_violations_are_verdicts_not_errors() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_balcox"))
        .args(["hypertree", "check", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"n": 6, "parts": [[1,2,3], [4,5,6]]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["satisfied"], Value::Bool(false));
    assert!(v["violation"].as_str().unwrap().contains("normality"));
}

#[test]
fn enumerate_minimal_lists_the_catalogue() {
    let v = balcox_json(&["enumerate-minimal", "--vertices", "4"]);
    assert_eq!(v["count"], 6);
    let tags: Vec<&str> =
        v["graphs"].as_array().unwrap().iter().map(|g| g["shape"]["tag"].as_str().unwrap()).collect();
    assert!(tags.contains(&"EvenCycle"));
    assert!(tags.contains(&"TwoOddCyclesSharedVertex"));
    let v = balcox_json(&["enumerate-minimal", "--vertices", "4", "--char", "2"]);
    assert_eq!(v["count"], 4);
}

#[test]
fn reports_tabulate_characteristics_and_catalogue() {
    let v = balcox_json(&["report", "char-sweep", "fixtures://two-triangles-disjoint"]);
    let verdicts: Vec<bool> = v["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["balanceable"].as_bool().unwrap())
        .collect();
    assert_eq!(verdicts, [false, true, false, false]);

    let v = balcox_json(&["report", "char-sweep", "fixtures://octagon", "--chars", "0,2,3,5"]);
    let verdicts: Vec<bool> = v["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["balanceable"].as_bool().unwrap())
        .collect();
    assert_eq!(verdicts, [true, true, true, true]);

    let v = balcox_json(&["report", "catalogue", "--vertices", "5"]);
    assert_eq!(v["mismatches"], 0);
    assert_eq!(v["count"], 10);
}

#[test]
fn fixtures_list_and_resolve() {
    let v = balcox_json(&["fixtures"]);
    let names: Vec<&str> =
        v["fixtures"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert!(names.contains(&"octagon"));
    assert!(names.contains(&"F9"));
    for name in names {
        let payload = balcox_json(&["fixtures", name]);
        assert!(payload.is_object());
    }
}

#[test]
fn stdin_files_and_uris_are_interchangeable() {
    let dir = std::env::temp_dir().join("balcox-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("square.json");
    let payload = balcox_json(&["fixtures", "square"]);
    std::fs::write(&path, payload.to_string()).unwrap();
    let from_file = balcox_json(&["balance", path.to_str().unwrap()]);
    let from_uri = balcox_json(&["balance", "fixtures://square"]);
    assert_eq!(from_file, from_uri);
}

#[test]
fn domain_errors_exit_one_with_an_error_object() {
    let out = balcox(&["balance", "fixtures://no-such-fixture"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "invalid-json");

    let out = balcox(&["pair", "fixtures://class-oct", "fixtures://class-oct"]);
    assert_eq!(out.status.code(), Some(1), "a divisor class is not a curve");

    let out = balcox(&["enumerate-minimal", "--vertices", "9"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "enumeration-budget-exceeded");
}

#[test]
fn usage_errors_exit_two() {
    let out = balcox(&["balance", "--no-such-flag", "fixtures://square"]);
    assert_eq!(out.status.code(), Some(2));
    let out = balcox(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic_across_job_counts() {
    let one = balcox_json(&["--jobs", "1", "enumerate-hypertrees", "--n", "7"]);
    let four = balcox_json(&["--jobs", "4", "enumerate-hypertrees", "--n", "7"]);
    assert_eq!(one, four);
    assert_eq!(one["count"], 1);
}
