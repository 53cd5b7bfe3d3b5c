use std::process::{Command, Output};

fn triality(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_triality")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_triality_json() {
    let o = triality(&["verify", "--suite", "triality", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let total = v["summary"]["total"].as_u64().unwrap();
    assert!(total >= 48 + 24 + 24, "{total}");
    assert_eq!(v["summary"]["fail"], 0);
    assert_eq!(v["results"][0]["suite"], "triality");
    assert!(v["results"][0]["paper_ref"].is_string());
}

#[test]
fn unknown_suite_exits_two() {
    assert_eq!(triality(&["verify", "--suite", "nosuch"]).status.code(), Some(2));
}

#[test]
fn bad_flags_exit_two() {
    assert_eq!(triality(&["verify", "--format", "yaml"]).status.code(), Some(2));
    assert_eq!(triality(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn octonion_anomaly_exits_zero_with_warning() {
    let o = triality(&["verify", "--suite", "octonion"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("anomaly"));
    assert!(stdout(&o).contains("[anomaly]"));
}

#[test]
fn report_is_byte_stable() {
    let a = triality(&["verify", "--suite", "triples", "--format", "json", "--seed", "3"]);
    let b = triality(&["verify", "--suite", "triples", "--format", "json", "--seed", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("triality-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = triality(&["verify", "--suite", "exterior", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("\"tool_version\""));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn tables() {
    let md = triality(&["tables", "psi", "--format", "md"]);
    assert_eq!(md.status.code(), Some(0));
    assert_eq!(stdout(&md).lines().count(), 2 + 48);

    let json = triality(&["tables", "theta_plus", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 24);
    assert!(rows[0].get("output_second").is_none());

    let oct = triality(&["tables", "octonion_mult", "--format", "md"]);
    assert_eq!(stdout(&oct).lines().count(), 2 + 8);

    let tex = triality(&["tables", "structure_constants", "--format", "latex"]);
    assert!(stdout(&tex).starts_with("\\begin{tabular}"));

    assert_eq!(triality(&["tables", "nosuch"]).status.code(), Some(2));
}

#[test]
fn eval() {
    let o = triality(&["eval", "psi(X[e1-e2](t))"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(x[e3+e4](-t), x[-e1-e2](t))");

    let o = triality(&["eval", "X[e1-e2](t) * X[e1-e2](s)", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kind"], "clifford");

    assert_eq!(triality(&["eval", "chi(v1)"]).status.code(), Some(1));
    assert_eq!(triality(&["eval", "X[e1-e2](t"]).status.code(), Some(2));
    assert_eq!(triality(&["eval", "X[e1+e1](t)"]).status.code(), Some(2));
}
