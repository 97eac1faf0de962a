use std::process::{Command, Output};

use serde_json::Value;

fn klrwb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_klrwb")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn quiver_file(name: &str, body: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("klrwb-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn subset_suite_passes() {
    let out = klrwb(&["verify", "--suite", "subset", "--n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["model"], "subset");
    assert_eq!(v["passed"], true);
}

#[test]
fn gaussian_string() {
    let out = klrwb(&["gaussian", "--n", "4", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["gaussian"], "1+q+2*q^2+q^3+q^4");
}

#[test]
fn non_dominant_weight_is_an_input_error() {
    let out = klrwb(&["cyclotomic", "--highest-weight", r#"{"1": -1}"#, "--nu", r#"{"1": 1}"#]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["kind"], "input");
}

#[test]
fn unstabilized_quotient_is_a_check_failure() {
    let out = klrwb(&["cyclotomic", "--highest-weight", r#"{"1": 2}"#, "--nu", r#"{"1": 2}"#, "--cutoffs", "2,4"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["quotient"]["status"], "inconclusive");
}

#[test]
fn quiver_files() {
    let a2 = quiver_file("a2.json", r#"{"vertices": ["1", "2"], "edges": [["1", "2"]]}"#);
    let out = klrwb(&["count-reps", "--quiver", a2.to_str().unwrap(), "--nu", r#"{"1": 1, "2": 1}"#, "--burnside"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["orbit_report"]["orbit_count"], 2);
    assert_eq!(v["orbit_report"]["burnside_count"], 2);

    let looped = quiver_file("loop.json", r#"{"vertices": ["1"], "edges": [["1", "1"]]}"#);
    let out = klrwb(&["count-reps", "--quiver", looped.to_str().unwrap(), "--nu", r#"{"1": 1}"#]);
    assert_eq!(out.status.code(), Some(2));

    let affine = quiver_file(
        "a2tilde.json",
        r#"{"vertices": ["1", "2", "3"], "edges": [["1", "2"], ["2", "3"], ["3", "1"]]}"#,
    );
    let out = klrwb(&["count-reps", "--quiver", affine.to_str().unwrap(), "--nu", r#"{"1": 1}"#]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["kind"], "unsupported_type");

    let e6 = quiver_file(
        "e6.json",
        r#"{"vertices": ["1","2","3","4","5","6"], "edges": [["1","2"],["2","3"],["3","4"],["4","5"],["3","6"]]}"#,
    );
    let out = klrwb(&["count-reps", "--quiver", e6.to_str().unwrap(), "--nu", r#"{"3": 1, "6": 1}"#]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["orbit_report"]["orbit_count"], 2);

    let bad = quiver_file("bad.json", r#"{"vertices": ["1"], "edges": [], "extra": 1}"#);
    assert_eq!(klrwb(&["count-reps", "--quiver", bad.to_str().unwrap(), "--nu", "{}"]).status.code(), Some(2));
}

#[test]
fn graded_dim_and_weyl() {
    let out = klrwb(&["graded-dim", "--type", "A2", "--i", "[1,2]", "--j", "[2,1]", "--cutoff", "5", "--check"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["series"], "q+2*q^3+3*q^5");

    let out = klrwb(&["weyl", "--n", "2", "--r", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["weyl"]["matrix"], serde_json::json!([["0", "-1"], ["-1", "0"]]));

    assert_eq!(klrwb(&["weyl", "--n", "2", "--r", "1"]).status.code(), Some(2));
    assert_eq!(klrwb(&["gaussian", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn jobs_do_not_change_output() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("timing_ms");
        v
    };
    let a = strip(json(&klrwb(&["--jobs", "1", "verify", "--suite", "klr", "--seed", "3"])));
    let b = strip(json(&klrwb(&["--jobs", "4", "verify", "--suite", "klr", "--seed", "3"])));
    assert_eq!(a, b);
}
