use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn matsuo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matsuo"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = matsuo(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn group_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn group_symmetric_4() {
    let r = json(&["group", "--symmetric", "4"]);
    assert_eq!(r["involutions"], 6);
    assert_eq!(r["k"], 4);
    assert_eq!(r["components"], 1);
    assert_eq!(r["three_transposition"], true);
    assert_eq!(r["center_free"], true);
    assert_eq!(r["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(r["config"]["budget"], 1_000_000);
}

#[test]
fn group_weyl_and_file() {
    assert_eq!(json(&["group", "--weyl-a", "2"])["involutions"], 3);
    let f = group_file("# two commuting involutions\n(0 1)\n(2 3)\n");
    let r = json(&["group", "--file", f.path().to_str().unwrap()]);
    assert_eq!(r["components"], 2);
    assert_eq!(r["indecomposable"], false);
}

#[test]
fn group_file_errors() {
    let f = group_file("(0 1)\n(1 2\n");
    let out = matsuo(&["group", "--file", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let out = matsuo(&["group", "--file", "/nonexistent/group.txt"]);
    assert_eq!(out.status.code(), Some(3));

    // (0 1)(2 3) times (0 2) is a 4-cycle
    let f = group_file("(0 1)(2 3)\n(0 2)\n");
    let out = matsuo(&["group", "--file", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["three_transposition"], false);
    assert_eq!(r["offending_pair"]["order"], 4);
}

#[test]
fn budget_is_surfaced() {
    let out = matsuo(&["group", "--symmetric", "6", "--budget", "100"]);
    assert_eq!(out.status.code(), Some(5));
    assert!(String::from_utf8_lossy(&out.stderr).contains("100"));
    let out = matsuo(&["zhu", "--n", "6"]);
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn algebra_reports() {
    let r = json(&["algebra", "--symmetric", "3"]);
    assert_eq!(r["central_charge"], "6/5");
    assert_eq!(r["conformal_coefficient"], "4/5");
    assert_eq!(r["nullity"], 0);
    assert_eq!(r["signature"], serde_json::json!([3, 0, 0]));
    assert_eq!(r["alpha"], "1/2");
    assert_eq!(r["rho_faithful"], true);
    assert_eq!(r["invariance"]["exhaustive"], true);
    for key in ["dim", "alpha", "beta", "k", "indecomposable", "rank", "nullity", "signature", "central_charge", "conformal_coefficient"] {
        assert!(r.get(key).is_some(), "missing {key}");
    }

    assert_eq!(json(&["algebra", "--symmetric", "2"])["central_charge"], "1/2");

    let r = json(&["algebra", "--symmetric", "3", "--alpha", "4", "--beta", "1"]);
    assert_eq!(r["nullity"], 2);
    assert_eq!(r["quotient_dim"], 1);
    assert_eq!(r["beta"], "1/1");
}

#[test]
fn algebra_parameter_errors() {
    let out = matsuo(&["algebra", "--symmetric", "3", "--alpha", "0"]);
    assert_eq!(out.status.code(), Some(4));
    let out = matsuo(&["algebra", "--symmetric", "3", "--alpha", "1/0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = matsuo(&["algebra", "--symmetric", "3", "--weyl-a", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = matsuo(&["algebra", "--symmetric", "3", "--unknown"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn decomposable_algebra_lists_summands() {
    let f = group_file("(0 1)\n(2 3)\n");
    let r = json(&["algebra", "--file", f.path().to_str().unwrap()]);
    assert_eq!(r["k"], Value::Null);
    assert_eq!(r["central_charge"], Value::Null);
    let summands = r["summands"].as_array().unwrap();
    assert_eq!(summands.len(), 2);
    assert!(summands.iter().all(|s| s["central_charge"] == "1/2"));
}

#[test]
fn fusion_outputs() {
    let r = json(&["fusion", "--n", "1"]);
    assert_eq!(r["labels"].as_array().unwrap().len(), 3);
    assert_eq!(r["products"].as_array().unwrap().len(), 9);
    let weights: Vec<&str> = r["labels"].as_array().unwrap().iter().map(|l| l["h"].as_str().unwrap()).collect();
    assert_eq!(weights, ["0/1", "1/16", "1/2"]);

    let r = json(&["fusion", "--n", "1", "--pair", "1,1", "2,2"]);
    let outputs = r["outputs"].as_array().unwrap();
    assert_eq!(outputs.len(), 1);
    assert_eq!((outputs[0]["r"].as_u64(), outputs[0]["s"].as_u64()), (Some(1), Some(2)));
    assert_eq!(outputs[0]["h"], "1/16");

    let r = json(&["fusion", "--n", "2", "--pair", "3,1", "3,1"]);
    assert_eq!(r["outputs"].as_array().unwrap().len(), 1);
    assert_eq!(r["outputs"][0]["h"], "0/1");

    let out = matsuo(&["fusion", "--n", "1", "--pair", "5,1", "1,1"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("(1, 5, 1)"));
}

#[test]
fn fusion_csv_header() {
    let out = matsuo(&["fusion", "--n", "1", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,a_r,a_s,b_r,b_s,r,s,h,mult"));
    assert_eq!(lines.count(), 10);
}

#[test]
fn branch_zhu_coeffs() {
    let r = json(&["branch", "--n", "2", "--j", "0"]);
    assert_eq!(r["weights"], serde_json::json!(["0/1", "3/2"]));

    let r = json(&["zhu", "--n", "1"]);
    assert_eq!(r["quotient_dim"], 2);
    assert_eq!(r["ideal_dim"], 0);

    let r = json(&["zhu", "--n", "3", "--seed", "7"]);
    assert_eq!(r["quotient_dim"], 14);
    assert_eq!(r["config"]["seed"], 7);

    let r = json(&["coeffs", "p0", "--N", "8", "--k", "4", "--j", "4"]);
    assert_eq!(r["display"], "-Q4 + Q2·Q2");
    assert_eq!(
        r["polynomial"],
        serde_json::json!([{"coeff": "-1/1", "word": ["Q4"]}, {"coeff": "1/1", "word": ["Q2", "Q2"]}])
    );

    let r = json(&["coeffs", "half", "--i", "3", "--j", "2"]);
    assert_eq!(r["display"], "1/2·E·E");

    let r = json(&["coeffs", "exp", "--m", "3"]);
    assert_eq!(r["sequence"], serde_json::json!(["1/1", "1/1", "1/2"]));

    let r = json(&["coeffs", "verify", "--N", "6"]);
    assert_eq!(r["ok"], true);

    let out = matsuo(&["coeffs", "exp", "--m", "0"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn verify_all_small() {
    let r = json(&["verify-all", "--n", "2"]);
    assert_eq!(r["passed"], 11);
    assert_eq!(r["failed"], 0);
}

#[test]
fn output_is_deterministic_and_out_flag_writes() {
    let args = ["algebra", "--symmetric", "4", "--alpha", "1/3", "--beta", "2"];
    let a = matsuo(&args).stdout;
    let b = matsuo(&args).stdout;
    assert_eq!(a, b);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path.to_str().unwrap()]);
    let out = matsuo(&with_out);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), a);

    let out = matsuo(&["zhu", "--n", "1", "--out", "/nonexistent/dir/r.json"]);
    assert_eq!(out.status.code(), Some(7));
}

#[test]
fn sampled_validation_records_seed() {
    let r = json(&["algebra", "--symmetric", "12", "--seed", "42", "--budget", "10"]);
    assert_eq!(r["invariance"]["exhaustive"], false);
    assert_eq!(r["invariance"]["seed"], 42);
    assert_eq!(r["config"]["seed"], 42);
    assert_eq!(r["rho_faithful"], Value::Null);
}
