//! Criterion 12: every CLI invocation from the acceptance set, re-run with
//! identical seeds and `--threads 1`, produces byte-identical outputs.
//! Plus exit-code and validation behavior.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn densepart() -> Command {
    Command::new(env!("CARGO_BIN_EXE_densepart"))
}

fn run(args: &[&str], dir: &Path) -> Output {
    densepart()
        .args(args)
        .current_dir(dir)
        .env_remove("DENSEPART_BUDGET")
        .output()
        .expect("spawn densepart")
}

fn assert_identical_reruns(args: &[&str], dir: &Path, out_name: Option<&str>) {
    let first = run(args, dir);
    assert!(
        first.status.success(),
        "first run of {args:?} failed: {}",
        String::from_utf8_lossy(&first.stderr)
    );
    let first_file = out_name.map(|n| fs::read(dir.join(n)).expect("first output file"));
    let second = run(args, dir);
    assert!(second.status.success());
    let second_file = out_name.map(|n| fs::read(dir.join(n)).expect("second output file"));
    assert_eq!(
        first.stdout, second.stdout,
        "stdout differs between reruns of {args:?}"
    );
    assert_eq!(first_file, second_file, "output file differs for {args:?}");
}

#[test]
fn criterion_12_byte_identical_reruns() {
    let dir = tempfile::tempdir().unwrap();
    let dir = dir.path();

    // file-based graph for the approx invocation
    fs::write(dir.join("g.el"), "6 7\n1 2\n1 3\n2 3\n3 4\n4 5\n4 6\n5 6\n").unwrap();
    fs::write(
        dir.join("sweep.json"),
        r#"{"n":10,"p":0.5,"seeds":[0,1,2,3,4],"m":4,"alphas":[0.2],"orders":[1,2,3]}"#,
    )
    .unwrap();

    let invocations: Vec<(Vec<&str>, Option<&str>)> = vec![
        (
            vec![
                "approx",
                "--graph",
                "g.el",
                "--m",
                "4",
                "--alpha",
                "0.2",
                "--order",
                "3",
                "--threads",
                "1",
                "--out",
                "approx.json",
            ],
            Some("approx.json"),
        ),
        (
            vec![
                "approx",
                "--gen",
                "gnp:12:1.0:0",
                "--m",
                "4",
                "--gamma",
                "0.3",
                "--mode",
                "rigorous",
                "--max-order",
                "5",
                "--allow-unguaranteed",
                "--threads",
                "1",
                "--out",
                "rigorous.json",
            ],
            Some("rigorous.json"),
        ),
        (
            vec![
                "exact",
                "--gen",
                "gnp:10:0.5:7",
                "--m",
                "4",
                "--gamma",
                "0.5",
                "--threads",
                "1",
            ],
            None,
        ),
        (
            vec![
                "extract",
                "--gen",
                "gnp:12:0.5:9000",
                "--m",
                "4",
                "--gamma",
                "1.0",
                "--engine",
                "exact",
                "--threads",
                "1",
                "--out",
                "extract.json",
            ],
            Some("extract.json"),
        ),
        (
            vec![
                "params",
                "--delta",
                "0.5",
                "--m",
                "4",
                "--gamma",
                "0.3",
                "--threads",
                "1",
            ],
            None,
        ),
        (
            vec![
                "zeros",
                "--n",
                "150",
                "--m",
                "3",
                "--r",
                "1",
                "--tau",
                "2",
                "--trials",
                "200",
                "--seed",
                "1",
                "--threads",
                "1",
                "--out",
                "zeros.csv",
            ],
            Some("zeros.csv"),
        ),
        (
            vec![
                "check-identity",
                "--n",
                "4",
                "--m",
                "2",
                "--radius",
                "1",
                "--threads",
                "1",
            ],
            None,
        ),
        (
            vec![
                "sweep",
                "--config",
                "sweep.json",
                "--threads",
                "1",
                "--out",
                "sweep.csv",
            ],
            Some("sweep.csv"),
        ),
    ];
    for (args, out_name) in &invocations {
        assert_identical_reruns(args, dir, *out_name);
    }
    println!(
        "criterion 12 PASS — {} CLI invocations byte-identical across reruns",
        invocations.len()
    );
}

#[test]
fn zeros_thread_count_does_not_change_records() {
    let dir = tempfile::tempdir().unwrap();
    let dir = dir.path();
    let base = [
        "zeros", "--n", "30", "--m", "3", "--r", "1", "--tau", "2", "--trials", "16", "--seed",
        "3", "--out", "z.csv",
    ];
    let mut one = base.to_vec();
    one.extend(["--threads", "1"]);
    assert!(run(&one, dir).status.success());
    let single = fs::read(dir.join("z.csv")).unwrap();
    let mut four = base.to_vec();
    four.extend(["--threads", "4"]);
    assert!(run(&four, dir).status.success());
    let parallel = fs::read(dir.join("z.csv")).unwrap();
    assert_eq!(single, parallel);
}

#[test]
fn rejects_both_gamma_and_alpha() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        &[
            "approx",
            "--gen",
            "gnp:8:0.5:1",
            "--m",
            "3",
            "--alpha",
            "0.2",
            "--gamma",
            "0.5",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exactly one"));
}

#[test]
fn exit_codes_validation_and_budget() {
    let dir = tempfile::tempdir().unwrap();
    let dir = dir.path();

    // unreadable graph file
    let out = run(
        &[
            "exact",
            "--graph",
            "missing.el",
            "--m",
            "3",
            "--gamma",
            "0.5",
        ],
        dir,
    );
    assert_eq!(out.status.code(), Some(1));

    // malformed generator spec
    let out = run(
        &["exact", "--gen", "bogus:1", "--m", "3", "--gamma", "0.5"],
        dir,
    );
    assert_eq!(out.status.code(), Some(1));

    // parse error with line number on stderr
    fs::write(dir.join("bad.el"), "3 1\n1 4\n").unwrap();
    let out = run(
        &["exact", "--graph", "bad.el", "--m", "2", "--gamma", "0.5"],
        dir,
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    // enumeration budget failures exit 2
    let out = densepart()
        .args([
            "exact",
            "--gen",
            "gnp:30:0.5:1",
            "--m",
            "10",
            "--gamma",
            "0.5",
        ])
        .env("DENSEPART_BUDGET", "100")
        .current_dir(dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // out-of-range numeric
    let out = run(
        &[
            "exact",
            "--gen",
            "gnp:10:0.5:1",
            "--m",
            "40",
            "--gamma",
            "0.5",
        ],
        dir,
    );
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn approx_json_has_fixed_field_names() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        &[
            "approx",
            "--gen",
            "gnp:10:0.5:7",
            "--m",
            "4",
            "--alpha",
            "0.2",
            "--order",
            "3",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for key in [
        "mode",
        "n",
        "m",
        "gamma",
        "alpha",
        "order_used",
        "ln_den",
        "certified_density",
        "error_bound",
        "budget_limited",
    ] {
        assert!(v.get(key).is_some(), "missing field {key}");
    }
    assert_eq!(v["mode"], "direct");
    assert!(v.get("subset").is_none());
}

#[test]
fn extract_json_carries_subset() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        &[
            "extract",
            "--gen",
            "gnp:10:0.6:5",
            "--m",
            "4",
            "--gamma",
            "1.0",
            "--engine",
            "approx",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["mode"], "extract");
    assert_eq!(v["subset"].as_array().unwrap().len(), 4);
}
