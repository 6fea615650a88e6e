use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::tempdir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hompoisson"))
}

fn run(dir: &Path, args: &[&str]) -> Output {
    bin().current_dir(dir).args(args).output().expect("spawn")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn gallery(dir: &Path) {
    let o = run(dir, &["fixtures", "--output", "g"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn exit_codes_follow_the_three_classes() {
    let dir = tempdir().unwrap();
    gallery(dir.path());
    assert_eq!(run(dir.path(), &["check", "g/P1.json"]).status.code(), Some(0));

    let o = run(dir.path(), &["check", "g/F7.json"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("Eq. (16) violated at (e2,e1,e1)"));

    assert_eq!(run(dir.path(), &["check", "g/missing.json"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["check", "g/F1.json", "--as", "hom-zinbiel"]).status.code(), Some(2));
}

#[test]
fn forced_check_reports_a_triple() {
    let dir = tempdir().unwrap();
    gallery(dir.path());
    let o = run(dir.path(), &["check", "g/F1.json", "--as", "hom-zinbiel", "--force", "--json-report"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], Value::Bool(false));
    assert_eq!(v["violations"][0]["identity"], "Eq. (12)");
    assert_eq!(v["violations"][0]["indices"].as_array().unwrap().len(), 3);
}

#[test]
fn all_violations_and_jobs_give_the_same_report() {
    let dir = tempdir().unwrap();
    gallery(dir.path());
    let args = ["check", "g/F1.json", "--as", "hom-zinbiel", "--force", "--all-violations"];
    let one = run(dir.path(), &args);
    let four = run(dir.path(), &[&["--jobs", "4"][..], &args[..]].concat());
    assert_eq!(stdout(&one), stdout(&four));
    assert!(stdout(&one).lines().count() > 2);
}

#[test]
fn construct_limit_and_untwist() {
    let dir = tempdir().unwrap();
    gallery(dir.path());
    let o = run(dir.path(), &["construct", "subadjacent-poisson", "g/P1.json", "--output", "f6.json"]);
    assert!(o.status.success());
    let f6 = std::fs::read_to_string(dir.path().join("f6.json")).unwrap();
    let want = std::fs::read_to_string(dir.path().join("g/F6.json")).unwrap();
    let strip = |s: &str| {
        let mut v: Value = serde_json::from_str(s).unwrap();
        v.as_object_mut().unwrap().remove("metadata");
        v
    };
    assert_eq!(strip(&f6), strip(&want));

    let o = run(dir.path(), &["limit", "g/D1.json", "--output", "lim.json"]);
    assert!(o.status.success());
    assert_eq!(run(dir.path(), &["check", "lim.json"]).status.code(), Some(0));

    assert!(run(dir.path(), &["twist", "g/P1.json", "--matrix", "[[2,0],[0,4]]", "--output", "t.json"]).status.success());
    assert!(run(dir.path(), &["untwist", "t.json", "--output", "u.json"]).status.success());
    let u = std::fs::read_to_string(dir.path().join("u.json")).unwrap();
    assert_eq!(strip(&u), strip(&std::fs::read_to_string(dir.path().join("g/P1.json")).unwrap()));
}

#[test]
fn fail_closed_construction_writes_nothing() {
    let dir = tempdir().unwrap();
    gallery(dir.path());
    let o = run(dir.path(), &["construct", "subadjacent-poisson", "g/P3.json", "--output", "out.json"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!dir.path().join("out.json").exists());
    let o = run(
        dir.path(),
        &["construct", "prepoisson-from-cocycle", "g/W2-cocycle.json", "--variant", "proofline", "--output", "out.json"],
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(!dir.path().join("out.json").exists());
}

#[test]
fn search_dualize_and_deform_check() {
    let dir = tempdir().unwrap();
    gallery(dir.path());
    let o = run(dir.path(), &["search", "g/F1P-regular.json", "--bound", "1", "--output", "ops.json"]);
    assert!(o.status.success());
    let ops: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("ops.json")).unwrap()).unwrap();
    assert_eq!(ops.as_array().unwrap().len(), 3);
    assert!(stdout(&o).contains("T = [[0, 0], [1, 0]]"));

    let o = run(dir.path(), &["search", "g/F1P-regular.json", "--bound", "0"]);
    assert!(stdout(&o).contains("1 O-operator(s)"));

    assert!(run(dir.path(), &["dualize", "g/F1P-regular.json", "--output", "dual.json"]).status.success());
    assert_eq!(run(dir.path(), &["check", "dual.json"]).status.code(), Some(0));

    let o = run(dir.path(), &["deform-check", "g/D1.json", "--order", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("order 1"));
}

#[test]
fn run_executes_job_documents() {
    let dir = tempdir().unwrap();
    gallery(dir.path());
    let job = serde_json::json!({
        "document": "job",
        "format_version": "1",
        "command": "construct",
        "inputs": ["g/P2.json"],
        "parameters": {"construction": "subadjacent-poisson", "output": "p2s.json"}
    });
    std::fs::write(dir.path().join("job.json"), job.to_string()).unwrap();
    let o = run(dir.path(), &["run", "job.json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(run(dir.path(), &["check", "p2s.json"]).status.code(), Some(0));
}

#[test]
fn malformed_documents_are_validation_errors() {
    let dir = tempdir().unwrap();
    gallery(dir.path());
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("g/F1.json")).unwrap()).unwrap();
    v["products"]["dot"][0][0][0] = Value::String("1/0".into());
    std::fs::write(dir.path().join("bad.json"), v.to_string()).unwrap();
    let o = run(dir.path(), &["check", "bad.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("malformed rational"));
}
