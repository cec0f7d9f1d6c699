//! End-to-end tests of the binary: the documented exit-code contract,
//! JSON shapes, and byte-level determinism.

use std::process::{Command, Output};

fn grasshom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grasshom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn classify_rank_one_example() {
    let out = grasshom(&["classify", "--field", "R", "[2,3)", "[0,2)", "[0,1)", "[1,3)"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["dim"], 1);
    assert_eq!(v["family"], "Mixed/Rank1");
    assert_eq!(v["params"]["i"], 1);
    assert_eq!(v["params"]["j"], 2);
    assert_eq!(v["params"]["k"], 3);
    assert_eq!(v["reference"], "mix1");
}

#[test]
fn classify_complex_capelli_shape_reports_standard_by_priority() {
    // (1, δ; δ, 1) is both the (i=1, j=0) Capelli pattern and the literal
    // standard swap; the first-match priority order reports Standard.
    let out = grasshom(&[
        "classify", "--field", "C", "1:1", "1:det^1", "1:det^1", "1:1",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["dim"], 1);
    assert_eq!(v["family"], "Standard/KnappStein");
    // A j ≠ 0 instance has no standard description and reports the
    // exceptional certificate.
    let out = grasshom(&[
        "classify", "--field", "C", "1:1", "1:det^1*detbar^1", "1:det^1", "1:detbar^1",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["family"], "Exceptional/ComplexCapelli");
    assert_eq!(v["params"]["variant"], 1);
    assert_eq!(v["params"]["i"], 1);
    assert_eq!(v["params"]["j"], 1);
    assert_eq!(v["reference"], "exc2");
}

#[test]
fn classify_dim_zero_is_still_success() {
    let out = grasshom(&["classify", "--field", "R", "1:nu^{1}", "1:1", "1:1", "1:1"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["dim"], 0);
    assert_eq!(v["reason"], "central-constraint-failed");
}

#[test]
fn exit_codes() {
    // Parse error in a character: 2.
    let out = grasshom(&["classify", "--field", "R", "1:bogus", "1:1", "1:1", "1:1"]);
    assert_eq!(out.status.code(), Some(2));
    // Unknown field name: 2.
    let out = grasshom(&["classify", "--field", "X", "1:1", "1:1", "1:1", "1:1"]);
    assert_eq!(out.status.code(), Some(2));
    // Size imbalance: 3.
    let out = grasshom(&["classify", "--field", "R", "[0,2)", "[0,1)", "[0,1)", "[0,1)"]);
    assert_eq!(out.status.code(), Some(3));
    // Failing check: 1.
    let out = grasshom(&[
        "verify-diffop", "--field", "R", "--k", "1", "--i", "1", "--perturb", "s2",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn human_output_mode() {
    let out = grasshom(&[
        "classify", "--field", "R", "--output", "human", "[0,3)", "[1,2)", "[0,2)", "[1,3)",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("Radon transform (mix2 case a)"), "got: {text}");
}

#[test]
fn verify_finite_fano() {
    let out = grasshom(&["verify-finite", "--n", "3", "--q", "2", "--radon", "1", "2"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["ok"], true);
    let kernel = &v["kernels"][0];
    assert_eq!(kernel["equivariant"], true);
    assert_eq!(kernel["rank"], 7);
    assert_eq!(kernel["rowsum"], "3");
    assert_eq!(v["constants_chain"]["value"], "9");
    // Generator list is reported in full.
    assert_eq!(v["generators"].as_array().unwrap().len(), 7);
}

#[test]
fn verify_finite_out_dir_writes_fixtures() {
    let dir = std::env::temp_dir().join(format!("grasshom-fixtures-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    let out = grasshom(&[
        "verify-finite", "--n", "3", "--q", "2", "--radon", "1", "2",
        "--out", dir.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let fixture = dir.join("radon_1_2_3_2.txt");
    let text = std::fs::read_to_string(&fixture).unwrap();
    assert!(text.starts_with("7 7\n"));
    assert_eq!(text.lines().count(), 8);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_diffop_positive() {
    let out = grasshom(&["verify-diffop", "--field", "R", "--k", "1", "--i", "1"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["ok"], true);

    let out = grasshom(&[
        "verify-diffop", "--field", "C", "--k", "1", "--i", "2", "--j", "-1",
    ]);
    assert!(out.status.success());
}

#[test]
fn verify_diffop_negative_control_names_witness() {
    let out = grasshom(&[
        "verify-diffop", "--field", "R", "--k", "1", "--i", "1", "--perturb", "s2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["ok"], false);
    assert_eq!(v["witness"], "E12");
}

#[test]
fn cross_check_modes() {
    let out = grasshom(&[
        "cross-check", "--field", "R", "--max-n", "3", "--exp-bound", "1",
        "--random-count", "200",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["ok"], true);
    assert_eq!(v["disagreements"].as_array().unwrap().len(), 0);

    let out = grasshom(&[
        "cross-check", "--field", "NA", "--q", "3", "--tag-orders", "2",
        "--max-n", "3", "--only-families",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["mode"], "families");
}

#[test]
fn seeded_runs_are_byte_identical() {
    let args = [
        "cross-check", "--field", "C", "--max-n", "3", "--exp-bound", "1",
        "--random-count", "300", "--seed", "99",
    ];
    let a = grasshom(&args);
    let b = grasshom(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let args = ["enumerate", "--field", "C", "--n", "3", "--exp-bound", "1", "--seed", "7"];
    let a = grasshom(&args);
    let b = grasshom(&args);
    assert!(a.status.success());
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn enumerate_limit_caps_output() {
    let out = grasshom(&[
        "enumerate", "--field", "R", "--n", "2", "--exp-bound", "1", "--limit", "5",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 5);
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["classification"]["dim"], 1);
        assert_eq!(v["quadruple"].as_array().unwrap().len(), 4);
    }
}

#[test]
fn json_keys_are_sorted() {
    let out = grasshom(&["classify", "--field", "R", "[2,3)", "[0,2)", "[0,1)", "[1,3)"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let dim = text.find("\"dim\"").unwrap();
    let fam = text.find("\"family\"").unwrap();
    let par = text.find("\"params\"").unwrap();
    let rf = text.find("\"reference\"").unwrap();
    assert!(dim < fam && fam < par && par < rf);
}
