//! End-to-end tests against the built binary: output values, formats,
//! exit codes, and run-to-run determinism.

use std::process::{Command, Output};

fn qcf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn compute_known_values() {
    let out = qcf(&["compute", "--graph", "star:5", "--index", "q"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("q = 5.000000000000"), "{}", stdout(&out));

    let out = qcf(&["compute", "--graph", "gnk:6,1", "--index", "q"]);
    assert!(stdout(&out).contains("q = 6.201472338219"));

    let out = qcf(&["compute", "--graph", "cycle:6", "--index", "both"]);
    let text = stdout(&out);
    assert!(text.contains("q = 4.000000000000"));
    assert!(text.contains("mu = 4.000000000000"));

    let out = qcf(&["compute", "--graph", "path:4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["n"], 4);
    assert!((v["q"].as_f64().unwrap() - 3.41421356237309).abs() < 1e-9);
}

#[test]
fn parse_failures_exit_one() {
    let out = qcf(&["compute", "--graph", "g6:¬bad"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());

    let out = qcf(&["compute", "--graph", "nosuchtag:5"]);
    assert_eq!(out.status.code(), Some(1));

    let out = qcf(&["compute", "--graph", "cycle:2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn enumerate_lines_and_ranking() {
    let out = qcf(&["enumerate", "--n", "5", "--k", "1", "--c4free"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 4);

    let out = qcf(&[
        "enumerate", "--n", "6", "--k", "1", "--c4free", "--rank", "q", "--top", "3",
    ]);
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 3);
    let vals: Vec<f64> = rows
        .iter()
        .map(|r| r.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert!(vals[0] > vals[1] && vals[1] > vals[2]);
    assert!((vals[0] - 6.201472338219).abs() < 1e-9);

    let out = qcf(&["enumerate", "--n", "20", "--k", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn naive_generator_agrees() {
    let fast = qcf(&["enumerate", "--n", "6", "--k", "2", "--c4free"]);
    let naive = qcf(&["enumerate", "--n", "6", "--k", "2", "--c4free", "--naive"]);
    let mut a: Vec<String> = stdout(&fast).lines().map(String::from).collect();
    let mut b: Vec<String> = stdout(&naive).lines().map(String::from).collect();
    a.sort();
    b.sort();
    assert_eq!(a, b);
}

#[test]
fn verify_pass_fail_and_report_file() {
    let dir = std::env::temp_dir().join("qcf-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let report = dir.join("thm32.json");
    let out = qcf(&[
        "verify",
        "--claim",
        "thm3.2",
        "--n",
        "6",
        "--out",
        report.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("thm3.2 n=6: pass"));
    let body: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(body[0]["status"], "pass");
    assert!(body[0]["witnesses"]["top"].is_array());

    // precondition violation is a usage error
    let out = qcf(&["verify", "--claim", "thm3.1", "--n", "3", "--k", "1"]);
    assert_eq!(out.status.code(), Some(1));

    let out = qcf(&["verify", "--claim", "nonsense"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn seeded_runs_are_byte_identical() {
    let a = qcf(&["verify", "--claim", "lem2.1", "--trials", "60", "--seed", "7"]);
    let b = qcf(&["verify", "--claim", "lem2.1", "--trials", "60", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let c = qcf(&["enumerate", "--n", "7", "--k", "1", "--c4free", "--rank", "q"]);
    let d = qcf(&["enumerate", "--n", "7", "--k", "1", "--c4free", "--rank", "q"]);
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn root_command() {
    let out = qcf(&["root", "--poly", "fk:6,1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "6.201472338219");

    let out = qcf(&["root", "--poly", "f2:6"]);
    assert_eq!(stdout(&out).trim(), "5.534418480423");

    let out = qcf(&["root", "--poly", "coeffs:-1,0,1", "--lo", "0", "--hi", "2"]);
    assert_eq!(stdout(&out).trim(), "1.000000000000");

    let out = qcf(&["root", "--poly", "fk:4,2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bound_command() {
    let out = qcf(&["bound", "--graph", "star:5"]);
    let text = stdout(&out);
    assert!(text.contains("5.000000000000"));
    assert!(text.contains("semiregular-bipartite"));
    assert!(text.contains("star: true"));
}

#[test]
fn file_sources() {
    let dir = std::env::temp_dir().join("qcf-cli-test");
    std::fs::create_dir_all(&dir).unwrap();

    let text_path = dir.join("p4.txt");
    std::fs::write(&text_path, "4 3\n0 1\n1 2\n2 3\n").unwrap();
    let out = qcf(&[
        "compute",
        "--graph",
        &format!("file:{}", text_path.display()),
        "--index",
        "q",
    ]);
    assert!(stdout(&out).contains("q = 3.414213562373"));

    let g6_path = dir.join("p4.g6");
    std::fs::write(&g6_path, "Ch\n").unwrap();
    let out = qcf(&[
        "compute",
        "--graph",
        &format!("file:{}", g6_path.display()),
        "--index",
        "q",
    ]);
    assert!(stdout(&out).contains("q = 3.414213562373"));
}

#[test]
fn workers_do_not_change_output() {
    let single = qcf(&["enumerate", "--n", "8", "--k", "2", "--c4free", "--rank", "q"]);
    let multi = qcf(&[
        "--workers", "4", "enumerate", "--n", "8", "--k", "2", "--c4free", "--rank", "q",
    ]);
    assert!(single.status.success() && multi.status.success());
    assert_eq!(single.stdout, multi.stdout);
}
