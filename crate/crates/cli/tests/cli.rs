use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn mids(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mids"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Solve reports must match the checked-in files, wall time aside.
/// `UPDATE_GOLDEN=1` rewrites them.
#[test]
fn golden_solve_reports() {
    for (name, spec) in [
        ("gnp_18_0.3_1", "gnp/18/0.3/1"),
        ("gnp_24_0.2_2", "gnp/24/0.2/2"),
        ("gnp_30_0.15_3", "gnp/30/0.15/3"),
    ] {
        let out = mids(&["solve", "--gen", spec]);
        assert!(out.status.success());
        let mut got = json(&out);
        got["stats"].as_object_mut().unwrap().remove("wall_ms");
        let path = golden_dir().join(format!("{name}.json"));
        if std::env::var_os("UPDATE_GOLDEN").is_some() {
            std::fs::write(&path, serde_json::to_string_pretty(&got).unwrap() + "\n").unwrap();
        }
        let want: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(got, want, "{name}");
    }
}

#[test]
fn solve_cycle() {
    let out = mids(&["solve", "--gen", "cycle/5"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["result"]["size"], 2);
    assert_eq!(v["result"]["feasible"], true);
    assert_eq!(v["instance"]["n"], 5);
}

#[test]
fn infeasible_is_success() {
    let out = mids(&["solve", "--gen", "path/4", "--marked", "0,1,2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["feasible"], false);
    assert_eq!(v["result"]["size"], Value::Null);
}

#[test]
fn solve_and_oracle_agree_on_marked_input() {
    let args = ["--gen", "gnp/14/0.3/5", "--marked", "1,4,9"];
    let a = json(&mids(&[&["solve"][..], &args].concat()));
    let b = json(&mids(&[&["oracle"][..], &args].concat()));
    assert_eq!(a["result"]["size"], b["result"]["size"]);
}

#[test]
fn factor_prints_root() {
    let v = json(&mids(&["factor", "2,4"]));
    assert!((v["factor"].as_f64().unwrap() - 1.2721).abs() < 5e-4);
    assert!((v["log2"].as_f64().unwrap() - 0.3471).abs() < 5e-4);
}

#[test]
fn approx_target_ratio() {
    let out = mids(&[
        "approx",
        "--prop2",
        "--target-ratio",
        "2",
        "--gen",
        "gnp/30/0.2/7",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert!((v["params"]["r_internal"].as_f64().unwrap() - 3.11).abs() < 5e-3);
    assert_eq!(v["result"]["feasible"], true);
}

#[test]
fn enumerate_lines() {
    let out = mids(&["enumerate", "--gen", "path/4"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "0 2\n0 3\n1 3\n");
}

#[test]
fn gen_round_trips_through_input() {
    let dir = std::env::temp_dir().join(format!("mids-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("g.col");
    let out = mids(&["gen", "gnp/16/0.3/4", "-o", file.to_str().unwrap()]);
    assert!(out.status.success());
    let a = json(&mids(&["solve", "--input", file.to_str().unwrap()]));
    let b = json(&mids(&["solve", "--gen", "gnp/16/0.3/4"]));
    assert_eq!(a["result"], b["result"]);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(mids(&["solve"]).status.code(), Some(2));
    assert_eq!(
        mids(&["solve", "--gen", "nonsense/3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        mids(&["approx", "--prop1", "--r", "2", "--gen", "cycle/5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        mids(&["solve", "--input", "/definitely/missing.col"])
            .status
            .code(),
        Some(3)
    );
    let out = mids(&["solve", "--gen", "gnp/120/0.08/1", "--timeout-ms", "1"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(json(&out)["stats"]["nodes"].as_u64().unwrap() >= 1);
}

#[test]
fn bench_reports_slope() {
    let v = json(&mids(&["bench", "--sizes", "10,12,14", "--seeds", "3"]));
    assert_eq!(v["runs"].as_array().unwrap().len(), 9);
    assert!(v["fitted_exponent"].is_number());
    assert_eq!(v["reference_exponent"], 0.424);
}
