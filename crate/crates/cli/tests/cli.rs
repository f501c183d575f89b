use std::process::{Command, Output};

fn tbf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tbf")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

#[test]
fn semigroup_summary() {
    let out = tbf(&["semigroup", "--gens", "2,5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["gaps"], serde_json::json!([1, 3]));
    assert_eq!(v["frobenius"], 3);
    assert_eq!(v["conductor"], 4);
    assert_eq!(v["test_ideal"], serde_json::json!([4, 5]));
}

#[test]
fn star_bf_failure_exits_one() {
    let out = tbf(&["ideal", "--gens", "2,5", "--op", "star-bf", "--ideal", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["verdict"], false);
    assert_eq!(v["star"], serde_json::json!([4, 5]));
    assert_eq!(v["bf"], serde_json::json!([4, 7]));
    assert!(String::from_utf8_lossy(&out.stderr).contains("star-bf"));
}

#[test]
fn star_bf_success_in_cusp() {
    let out = tbf(&["ideal", "--gens", "2,3", "--op", "star-bf", "--ideal", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["verdict"], true);
}

#[test]
fn survey_of_cusp_passes() {
    let out = tbf(&["survey", "--gens", "2,3", "--bound", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let records = v["records"].as_array().unwrap();
    assert!(!records.is_empty());
    assert!(records.iter().all(|r| r["verdict_star_bf"] == true));
}

#[test]
fn survey_of_two_five_fails_star_bf() {
    let out = tbf(&["survey", "--gens", "2,5", "--bound", "12"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let rec = v["records"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["ideal_gens"] == serde_json::json!([4]))
        .unwrap();
    assert_eq!(rec["verdict_star_bf"], false);
    assert_eq!(rec["verdict_star_tau_bf"], true);
}

#[test]
fn survey_csv_header() {
    let out = tbf(&["survey", "--gens", "2,3", "--bound", "6", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("ideal_gens;star_gens;bf_gens;basically_full;star_bf;star_tau_bf"));
    assert_eq!(lines.count(), 8);
}

#[test]
fn seeded_reports_are_byte_identical() {
    let args = ["survey", "--gens", "3,4,5", "--bound", "10", "--trials", "200", "--seed", "7"];
    let a = tbf(&args);
    let b = tbf(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = tbf(&["axioms", "--gens", "2,5", "--trials", "300", "--seed", "42"]);
    assert_eq!(c.status.code(), Some(0));
    assert_eq!(json(&c)["violations"], serde_json::json!([]));
}

#[test]
fn find_t_reports_tau() {
    let out = tbf(&["find-t", "--gens", "2,5", "--bound", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let valid = v["valid"].as_array().unwrap();
    assert!(valid.contains(&serde_json::json!([4, 5])));
    assert!(!valid.contains(&serde_json::json!([2, 5])));
}

#[test]
fn hyper_suites() {
    let out = tbf(&["hyper", "counterexample", "--p", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let out = tbf(&["hyper", "verify", "--p", "5", "--t", "5-6", "--deg", "24"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    let out = tbf(&["hyper", "verify", "--p", "11"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ideal_arithmetic() {
    let out = tbf(&["ideal", "--gens", "2,5", "--op", "product", "--ideal", "2,5", "--ideal", "4"]);
    assert_eq!(json(&out)["result"], serde_json::json!([6, 9]));
    let out = tbf(&["ideal", "--gens", "2,5", "--op", "fpow", "--p", "3", "--ideal", "4,5"]);
    assert_eq!(json(&out)["result"], serde_json::json!([12, 15]));
    let out = tbf(&["ideal", "--gens", "2,3", "--op", "tbf", "--t-ideal", "0", "--ideal", "2"]);
    assert_eq!(json(&out)["result"], serde_json::json!([2]));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["ideal", "--gens", "2,5", "--op", "colon", "--ideal", "4"][..],
        &["ideal", "--gens", "2,5", "--op", "star", "--ideal", "3"],
        &["semigroup", "--gens", "2,4"],
        &["semigroup", "--gens", "x"],
        &["survey", "--gens", "3,7", "--bound", "5"],
        &["frobnicate"],
    ] {
        assert_eq!(tbf(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn writes_to_out_file() {
    let path = std::env::temp_dir().join(format!("tbf-cli-test-{}.json", std::process::id()));
    let out = tbf(&["semigroup", "--gens", "3,4", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["frobenius"], 5);
}
