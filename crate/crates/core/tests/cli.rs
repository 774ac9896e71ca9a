use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nearpenta"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap().to_string())
        .collect()
}

fn one_to_ten() -> Vec<String> {
    (1..=10).map(|i| i.to_string()).collect()
}

#[test]
fn solve_worked_exact() {
    let path = data("worked.json");
    let out = run(&["solve", path.to_str().unwrap(), "--mode", "exact"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(strings(&v["x"]), one_to_ten());
    assert_eq!(v["det"], "-145151505");
    assert_eq!(v["mode"], "exact");
    assert_eq!(v["zero_pivots"], serde_json::json!([]));
}

#[test]
fn solve_output_key_order_is_fixed() {
    let path = data("identity_5.json");
    let out = run(&["solve", path.to_str().unwrap()]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim(),
        r#"{"x":["5","4","3","2","1"],"det":"1","mode":"exact","zero_pivots":[]}"#
    );
}

#[test]
fn solve_rescue_exact_fails() {
    let path = data("rescue.json");
    let out = run(&["solve", path.to_str().unwrap(), "--mode", "exact"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("the method fails"), "{err}");
    let out = run(&["solve", path.to_str().unwrap(), "--mode", "numeric"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn solve_rescue_auto_falls_back() {
    let path = data("rescue.json");
    let out = run(&["solve", path.to_str().unwrap(), "--mode", "auto"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(strings(&v["x"]), one_to_ten());
    assert_eq!(v["det"], "61394805");
    assert_eq!(v["mode"], "symbolic");
    assert_eq!(v["zero_pivots"], serde_json::json!([1]));
}

#[test]
fn verbose_symbolic_prints_pre_substitution_solution() {
    let path = data("rescue.json");
    let out = run(&["solve", path.to_str().unwrap(), "--verbose"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let sym = strings(&v["symbolic_x"]);
    assert_eq!(sym[0], "(-4092987)/(4589918*x - 4092987)");
    assert_eq!(sym[1], "(4472889*x - 8185974)/(4589918*x - 4092987)");
    assert_eq!(strings(&v["pivots"])[0], "(x)/(1)");
}

#[test]
fn numeric_mode_reports_residual() {
    let path = data("worked.json");
    let out = run(&["solve", path.to_str().unwrap(), "--mode", "numeric"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["mode"], "numeric");
    assert!(v["residual_norm"].as_f64().unwrap() < 1e-9);
    for (i, x) in v["x"].as_array().unwrap().iter().enumerate() {
        assert!((x.as_f64().unwrap() - (i + 1) as f64).abs() < 1e-9);
    }
    let out = run(&[
        "solve",
        path.to_str().unwrap(),
        "--mode",
        "numeric",
        "--tol",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(3), "c_4 = 1 is within tol");
}

#[test]
fn singular_system_exits_4() {
    let path = data("singular_5.json");
    let out = run(&["solve", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    let out = run(&["det", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn det_command() {
    let worked = data("worked.json");
    let rescue = data("rescue.json");
    let id = data("identity_5.json");
    let det = |args: &[&str]| {
        let out = run(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        String::from_utf8(out.stdout).unwrap().trim().to_string()
    };
    assert_eq!(det(&["det", worked.to_str().unwrap()]), "\"-145151505\"");
    assert_eq!(det(&["det", id.to_str().unwrap()]), "\"1\"");
    assert_eq!(
        det(&["det", rescue.to_str().unwrap(), "--mode", "auto"]),
        "\"61394805\""
    );
    assert_eq!(
        det(&["det", rescue.to_str().unwrap(), "--mode", "symbolic"]),
        "\"61394805\""
    );
    let numeric: f64 = det(&["det", worked.to_str().unwrap(), "--mode", "numeric"])
        .parse()
        .unwrap();
    assert!((numeric + 145151505.0).abs() < 1e-3);
    assert_eq!(
        run(&["det", rescue.to_str().unwrap(), "--mode", "exact"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"n": 5, "d": [1, 1, 1, 1]}"#).unwrap();
    assert_eq!(
        run(&["solve", bad.to_str().unwrap()]).status.code(),
        Some(2)
    );
    std::fs::write(&bad, "not json").unwrap();
    assert_eq!(
        run(&["solve", bad.to_str().unwrap()]).status.code(),
        Some(2)
    );
    let text = std::fs::read_to_string(data("worked.json")).unwrap();
    std::fs::write(&bad, text.replace("\"s\": 5", "\"s\": \"five\"")).unwrap();
    assert_eq!(
        run(&["solve", bad.to_str().unwrap()]).status.code(),
        Some(2)
    );
    let no_y = text.replace(
        ",\n  \"y\": [30, 13, 35, 27, 69, 18, 38, 280, 328, 247]",
        "",
    );
    std::fs::write(&bad, no_y).unwrap();
    assert_eq!(
        run(&["solve", bad.to_str().unwrap()]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["det", bad.to_str().unwrap()]).status.code(), Some(0));
    let missing = dir.path().join("missing.json");
    assert_eq!(
        run(&["solve", missing.to_str().unwrap()]).status.code(),
        Some(2)
    );
}

#[test]
fn gen_laplacian_file() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("lap.json");
    let out = run(&[
        "gen",
        "laplacian",
        "10",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(v["n"], 10);
    assert!(v["d"].as_array().unwrap().iter().all(|d| d == -4));
    assert_eq!(v["s"], 0);
    assert_eq!(v["t"], 0);
    for key in ["a", "a_tilde", "b", "b_tilde"] {
        assert!(v[key].as_array().unwrap().iter().all(|e| e == 1), "{key}");
    }
}

#[test]
fn gen_random_is_reproducible() {
    let first = run(&["gen", "random", "5", "--seed", "1"]);
    let second = run(&["gen", "random", "5", "--seed", "1"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let other = run(&["gen", "random", "5", "--seed", "2"]);
    assert_ne!(first.stdout, other.stdout);
}

#[test]
fn gen_rejects_small_n() {
    assert_eq!(run(&["gen", "random", "4"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "laplacian", "3"]).status.code(), Some(2));
}

#[test]
fn gen_then_solve_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (kind, n) in [
        ("laplacian", 5),
        ("random", 5),
        ("laplacian", 37),
        ("random", 64),
        ("laplacian", 1000),
        ("random", 1000),
    ] {
        let path = dir.path().join(format!("{kind}_{n}.json"));
        let out = run(&[
            "gen",
            kind,
            &n.to_string(),
            "--seed",
            "3",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0), "gen {kind} {n}");
        for mode in ["auto", "numeric"] {
            let out = run(&["solve", path.to_str().unwrap(), "--mode", mode]);
            // generated right-hand sides make the solution 1..n
            let code = out.status.code();
            assert!(
                matches!(code, Some(0 | 3 | 4)),
                "{kind} {n} {mode}: {code:?}"
            );
            if mode == "auto" && code == Some(0) {
                let v = stdout_json(&out);
                let expect: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
                assert_eq!(strings(&v["x"]), expect, "{kind} {n}");
            }
        }
    }
}

#[test]
fn oracle_solve_matches() {
    let path = data("rescue.json");
    let out = run(&["oracle-solve", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(strings(&v["x"]), one_to_ten());
    assert_eq!(v["det"], "61394805");
}
