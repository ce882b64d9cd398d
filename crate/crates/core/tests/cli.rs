use serde_json::Value;
use yangian::central::qdet;
use yangian::cli::{run, TRUNC_ENV};
use yangian::io::element_to_json;
use yangian::Yangian;

fn json(stdout: &str) -> Value {
    serde_json::from_str(stdout).expect("valid JSON")
}

#[test]
fn compute_c_matches_qdet() {
    let out = run(["compute", "C", "--n", "3", "--p", "3", "--r", "4", "--trunc", "8", "--out", "json"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v = json(&out.stdout);
    let y = Yangian::new(3, 3).unwrap();
    let want = element_to_json(qdet(&y, 8).unwrap().coefficient(4).unwrap());
    assert_eq!(v["element"], want);
    assert_eq!(v["config"]["trunc"], 8);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(["compute", "C", "--n", "0", "--p", "3"]).code, 2);
    assert_eq!(run(["compute", "P", "--n", "2", "--i", "2", "--j", "1"]).code, 2);
    assert_eq!(run(["verify", "nothing"]).code, 2);
    assert_eq!(run(["gauss", "--out", "xml"]).code, 2);
    assert_eq!(run(["certify", "--element", "T[1,1"]).code, 2);
}

#[test]
fn verify_report_schema() {
    let args = ["verify", "gauss-identities", "--n", "2", "--p", "3", "--trunc", "5", "--out", "json"];
    let out = run(args);
    assert_eq!(out.code, 0);
    assert_eq!(out, run(args));
    let v = json(&out.stdout);
    assert_eq!(v["config"]["trunc"], 5);
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    for c in checks {
        assert!(c["name"].is_string() && c["params"].is_object());
        assert_eq!(c["status"], "pass");
        assert!(c.get("witness").is_none());
    }
}

#[test]
fn failing_certificate_lists_witnesses() {
    let out = run(["certify", "--n", "2", "--p", "3", "--smax", "2", "--element", "T[1,2,1]", "--out", "json"]);
    assert_eq!(out.code, 1);
    let v = json(&out.stdout);
    let failed: Vec<&Value> = v["checks"].as_array().unwrap().iter().filter(|c| c["status"] == "fail").collect();
    assert!(failed.iter().any(|c| c["params"]["k"] == 2 && c["params"]["l"] == 1 && c["params"]["s"] == 1));
    assert!(failed.iter().all(|c| c["witness"].is_string()));
}

#[test]
fn gauss_and_lab() {
    let out = run(["gauss", "--n", "2", "--p", "2", "--trunc", "3", "--out", "json"]);
    assert_eq!(out.code, 0);
    let v = json(&out.stdout);
    assert_eq!(v["D"]["n"], 2);
    assert_eq!(v["E"]["entries"][1][0]["coeffs"], serde_json::json!({}));
    let lab = run(["lab", "--p", "2", "--trunc", "8"]);
    assert_eq!(lab.code, 0, "{}", lab.stdout);
    assert!(lab.stdout.starts_with("type I, p = 2, X = E_1(u)\n"));
}

#[test]
fn trunc_from_environment() {
    std::env::set_var(TRUNC_ENV, "3");
    let out = run(["compute", "C", "--n", "2", "--p", "2", "--out", "json"]);
    std::env::remove_var(TRUNC_ENV);
    assert_eq!(json(&out.stdout)["config"]["trunc"], 3);
    let explicit = run(["compute", "C", "--n", "2", "--p", "2", "--trunc", "2", "--out", "json"]);
    assert_eq!(json(&explicit.stdout)["config"]["trunc"], 2);
}
