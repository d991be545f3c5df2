use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_scott-brauer"));
    c.env_remove("SCOTT_BRAUER_SEED");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write_job(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("scott-brauer-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

const S4_JOB: &str = r#"{
  "field": {"p": 2},
  "group": {"degree": 4, "generators": [[1, 2, 3, 0], [1, 0, 2, 3]]},
  "subgroups": {
    "V4": {"permutations": [[1, 0, 3, 2], [2, 3, 0, 1]]},
    "C3": {"permutations": [[1, 2, 0, 3]]}
  },
  "vertex": "V4"
}"#;

#[test]
fn reproduce_ex23() {
    let o = run(&["reproduce", "ex2.3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let s = stdout(&o);
    assert!(s.contains("BI: false"));
    assert!(s.contains("Res^G_P M summands: [1,1]"));
    assert!(!s.contains("FAIL"));
}

#[test]
fn reproduce_ex34() {
    let o = run(&["reproduce", "ex3.4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let s = stdout(&o);
    assert!(s.contains("BI: false"));
    assert!(s.contains("Res_C_G(R) M summands: [4, 8]"));
}

#[test]
fn reproduce_ex35() {
    let o = run(&["reproduce", "ex3.5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let s = stdout(&o);
    assert!(s.contains("BI: true"));
    assert!(s.contains("index: 1"));
}

#[test]
fn unknown_example_is_a_parse_error() {
    assert_eq!(run(&["reproduce", "ex9.9"]).status.code(), Some(2));
}

fn without_timings(text: &str) -> Value {
    let mut v: Value = serde_json::from_str(text).unwrap();
    let obj = v.as_object_mut().unwrap();
    let keys: Vec<&String> = obj.keys().collect();
    assert_eq!(
        keys,
        ["command", "extensions", "field", "group_order", "input_digest", "timings", "verdicts"]
    );
    obj.remove("timings");
    v
}

#[test]
fn json_output_is_deterministic() {
    for args in [
        &["check-bi", "--example", "ex3.4", "--json"][..],
        &["reproduce", "ex2.3", "--json"][..],
    ] {
        let a = run(args);
        let b = bin().args(args).env("SCOTT_BRAUER_SEED", "0").output().unwrap();
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(without_timings(&stdout(&a)), without_timings(&stdout(&b)));
        let text = stdout(&a);
        let strip = |t: &str| {
            t.lines()
                .filter(|l| !l.contains("total_ms"))
                .collect::<Vec<_>>()
                .join("\n")
        };
        assert_eq!(strip(&text), strip(&stdout(&b)));
    }
}

#[test]
fn seed_does_not_change_verdicts() {
    let a = run(&["check-bi", "--example", "ex3.5", "--json"]);
    let b = bin()
        .args(["check-bi", "--example", "ex3.5", "--json"])
        .env("SCOTT_BRAUER_SEED", "12345")
        .output()
        .unwrap();
    assert_eq!(without_timings(&stdout(&a)), without_timings(&stdout(&b)));
}

#[test]
fn bad_seed_is_a_parse_error() {
    let o = bin()
        .args(["check-bi", "--example", "ex2.3"])
        .env("SCOTT_BRAUER_SEED", "nope")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_bi_from_file() {
    let path = write_job("s4.json", S4_JOB);
    let o = run(&["check-bi", "--input", path.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["command"], "check-bi");
    assert_eq!(v["group_order"], 24);
    assert_eq!(v["field"], "GF(2)");
    assert_eq!(v["verdicts"][0]["subject"], "brauer_indecomposable");
    assert_eq!(v["verdicts"][0]["value"], false);
    assert_eq!(v["input_digest"].as_str().unwrap().len(), 64);
}

#[test]
fn trivial_group_is_brauer_indecomposable() {
    let path = write_job(
        "trivial.json",
        r#"{"field": {"p": 3}, "group": {"degree": 1, "generators": []},
            "subgroups": {"P": {"generator_indices": []}}, "vertex": "P"}"#,
    );
    let o = run(&["check-bi", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("BI: true"));
}

#[test]
fn other_commands_run() {
    let path = write_job("s4-other.json", S4_JOB);
    let p = path.to_str().unwrap();
    let o = run(&["scott", "--input", p]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Sc(G, H): dim 2"));
    let o = run(&["decompose", "--input", p, "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdicts"][0]["summands"], serde_json::json!([2]));

    let with_q = S4_JOB.replace(r#""vertex": "V4""#, r#""vertex": "V4", "q": "V4""#);
    let path = write_job("s4-q.json", &with_q);
    let o = run(&["brauer-quotient", "--input", path.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdicts"][0]["q_order"], 4);
}

#[test]
fn malformed_input_exits_2() {
    let path = write_job("broken.json", "{ not json");
    assert_eq!(run(&["check-bi", "--input", path.to_str().unwrap()]).status.code(), Some(2));
    let path = write_job(
        "badperm.json",
        r#"{"field": {"p": 2}, "group": {"degree": 3, "generators": [[0, 0, 1]]}}"#,
    );
    assert_eq!(run(&["check-bi", "--input", path.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["check-bi"]).status.code(), Some(2));
}

#[test]
fn non_p_group_vertex_exits_3() {
    let job = S4_JOB.replace(r#""vertex": "V4""#, r#""vertex": "C3""#);
    let path = write_job("s4-c3.json", &job);
    assert_eq!(run(&["check-bi", "--input", path.to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn caps_exit_4() {
    let path = write_job("s4-cap.json", S4_JOB);
    let p = path.to_str().unwrap();
    assert_eq!(run(&["check-bi", "--input", p, "--max-order", "10"]).status.code(), Some(4));
    assert_eq!(run(&["check-bi", "--input", p, "--max-dim", "2"]).status.code(), Some(4));
}

#[test]
fn conjugacy_reduction_flag_keeps_the_verdict() {
    let a = run(&["check-bi", "--example", "ex2.3"]);
    let b = run(&["check-bi", "--example", "ex2.3", "--no-conjugacy-reduction"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(b.status.code(), Some(0));
    assert!(stdout(&a).contains("BI: false"));
    assert!(stdout(&b).contains("BI: false"));
}
