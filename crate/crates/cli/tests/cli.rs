use std::process::{Command, Output};

fn smashcyc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_smashcyc")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn hc_of_k2() {
    let out = smashcyc(&["--input", "cyclic_group(2)", "--computation", "hc", "--n-max", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema_version"], 1);
    let dims: Vec<u64> = v["tables"][0]["rows"].as_array().unwrap().iter().map(|r| r["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, vec![2, 0, 2]);
}

#[test]
fn surrogate_certifies() {
    let out = smashcyc(&["--input", "pareigis_surrogate(1)", "--computation", "cylindrical-cert", "--n-max", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["passed"], true);
}

#[test]
fn corrupted_r_exits_one_with_witness() {
    let path = std::env::temp_dir().join(format!("smashcyc-bad-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"preset": "pareigis_surrogate(1)", "r_patch": [{"row": 3, "col": 3, "c": "-2"}]}"#).unwrap();
    let out = smashcyc(&["--input", path.to_str().unwrap(), "--computation", "axioms"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let failed: Vec<&serde_json::Value> = v["checks"].as_array().unwrap().iter().filter(|c| c["passed"] == false).collect();
    assert!(!failed.is_empty());
    assert!(failed.iter().any(|c| c["witness"]["input"].is_array()));
}

#[test]
fn input_errors_exit_two() {
    let out = smashcyc(&["--input", "no_such_preset", "--computation", "hh"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--input"));
    let out = smashcyc(&["--input", "dual_numbers", "--computation", "hh", "--n-max", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--n-max"));
    let out = smashcyc(&["--input", "taft(3)", "--computation", "axioms"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--field"));
    let out = smashcyc(&["--input", "dual_numbers", "--computation", "matched-pair-check"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cyclotomic_field_accepted() {
    let out = smashcyc(&["--input", "taft(3)", "--computation", "axioms", "--field", "cyclotomic:3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn reports_are_byte_identical() {
    let args = ["--input", "pareigis_surrogate(1)", "--computation", "spectral-rows", "--n-max", "2", "--workers", "3"];
    let a = smashcyc(&args);
    let b = smashcyc(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn csv_tables() {
    let out = smashcyc(&["--input", "dual_numbers", "--computation", "hh", "--n-max", "3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "table,n,dim,flagged");
    let dims: Vec<&str> = rows[1..].iter().map(|r| r.split(',').nth(2).unwrap()).collect();
    assert_eq!(dims, vec!["2", "1", "1", "1"]);
}

#[test]
fn out_file_matches_stdout() {
    let path = std::env::temp_dir().join(format!("smashcyc-out-{}.json", std::process::id()));
    let base = ["--input", "sweedler", "--computation", "axioms"];
    let out = smashcyc(&base);
    let mut with_out = base.to_vec();
    with_out.extend(["--out", path.to_str().unwrap()]);
    let o2 = smashcyc(&with_out);
    assert_eq!(o2.status.code(), Some(0));
    assert!(o2.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), out.stdout);
    std::fs::remove_file(&path).ok();
}
