use std::process::{Command, Output};

fn orbits(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbits"))
        .args(args)
        .env_remove("ORBITS_CAP")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerate_counts_and_filters() {
    let out = orbits(&["enumerate", "--type", "A1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 6);
    let out = orbits(&["enumerate", "--type", "A1", "--stratum", "[]"]);
    assert_eq!(stdout(&out).lines().count(), 4);
    let out = orbits(&["enumerate", "--type", "A0"]);
    assert_eq!(stdout(&out).lines().count(), 1);
    let out = orbits(&[
        "enumerate",
        "--group",
        r#"{"type":"A2"}"#,
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 78);
}

#[test]
fn enumerate_is_deterministic_and_round_trips() {
    let a = orbits(&["enumerate", "--type", "B2"]);
    let b = orbits(&["enumerate", "--type", "B2"]);
    assert_eq!(a.stdout, b.stdout);
    for line in stdout(&a).lines() {
        let out = orbits(&["compare", "--type", "B2", line, line]);
        assert_eq!(stdout(&out).trim(), "EQUAL", "{line}");
    }
}

#[test]
fn compare_verdicts() {
    let out = orbits(&["compare", "--type", "A1", "(∅;e;1;e)", "(Δ;e;e;1)"]);
    assert_eq!(stdout(&out).trim(), "LEQ u=e v=1");
    let out = orbits(&["compare", "--type", "A1", "(Δ;e;e;1)", "(∅;e;1;e)"]);
    assert_eq!(stdout(&out).trim(), "GEQ u=e v=1");
    let out = orbits(&[
        "compare",
        "--type",
        "A1",
        "I=[];sigma=e;tau=e",
        "I=[1];sigma=e;tau=e;rho=1",
    ]);
    assert_eq!(stdout(&out).trim(), "INCOMPARABLE");
}

#[test]
fn non_canonical_label_exits_three() {
    let out = orbits(&[
        "compare",
        "--type",
        "A2",
        "I=[2];sigma=e;tau=e;rho=1",
        "I=[2];sigma=e;tau=e;rho=e",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("I=[2];sigma=1;tau=e;rho=e"), "{err}");
    let out = orbits(&["compare", "--type", "A2", "garbage", "I=[];sigma=e;tau=e"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn config_errors_exit_two() {
    assert_eq!(
        orbits(&["enumerate", "--type", "Q7"]).status.code(),
        Some(2)
    );
    assert_eq!(orbits(&["enumerate"]).status.code(), Some(2));
    assert_eq!(
        orbits(&["enumerate", "--type", "A1", "--group", r#"{"type":"A1"}"#])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        orbits(&["enumerate", "--group", r#"{"cartan":[[2,-2],[-2,2]]}"#])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        orbits(&[
            "enumerate",
            "--type",
            "A2",
            "--weight",
            "1=2",
            "--weight",
            "2=3"
        ])
        .status
        .code(),
        Some(2)
    );
    let out = Command::new(env!("CARGO_BIN_EXE_orbits"))
        .args(["enumerate", "--type", "A3"])
        .env("ORBITS_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_suites() {
    let out = orbits(&["verify", "--type", "A1", "--suite", "all"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().next(), Some("PASS"));
    let out = orbits(&["verify", "--type", "A2", "--suite", "poset"]);
    assert_eq!(out.status.code(), Some(0));
    let out = orbits(&[
        "verify",
        "--type",
        "A2",
        "--suite",
        "poset",
        "--inject-fault",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("FAIL"));
    let json: serde_json::Value = serde_json::from_str(text.split_once('\n').unwrap().1).unwrap();
    assert!(!json["suites"][0]["diff"].as_array().unwrap().is_empty());
}

#[test]
fn verify_random_suite_is_seeded() {
    let a = orbits(&["verify", "--type", "B3", "--suite", "random", "--seed", "7"]);
    let b = orbits(&["verify", "--type", "B3", "--suite", "random", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn poset_exports() {
    let out = orbits(&["poset", "--type", "A1", "--format", "dot"]);
    assert!(stdout(&out).starts_with("digraph"));
    let out = orbits(&["poset", "--type", "A2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["labels"].as_array().unwrap().len(), 78);
    let oracle = orbits(&["poset", "--type", "A2", "--format", "json", "--oracle"]);
    assert_eq!(out.stdout, oracle.stdout);
    let out = orbits(&["poset", "--type", "A1", "--format", "csv"]);
    assert_eq!(stdout(&out).lines().count(), 3);
}

#[test]
fn components_listing() {
    let out = orbits(&[
        "components",
        "--type",
        "A1",
        "I=[1];sigma=e;tau=e;rho=1",
        "--stratum",
        "[]",
    ]);
    let mut lines: Vec<&str> = std::str::from_utf8(&out.stdout).unwrap().lines().collect();
    lines.sort();
    assert_eq!(
        lines,
        ["I=[];sigma=1;tau=e;rho=e", "I=[];sigma=e;tau=1;rho=e"]
    );
}

#[test]
fn matrix_dump() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("orbits.json");
    let out = orbits(&[
        "matrix",
        "--n",
        "2",
        "--q",
        "3",
        "--dump",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let summary: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(summary["orbits"], 6);
    assert_eq!(summary["points"], 40);
    let dump: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let sizes: u64 = dump
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["size"].as_u64().unwrap())
        .sum();
    assert_eq!(sizes, 40);
    assert_eq!(
        orbits(&["matrix", "--n", "4", "--q", "2"]).status.code(),
        Some(2)
    );
}
