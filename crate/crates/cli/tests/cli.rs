use std::process::{Command, Output};

fn ao(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ao"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn exact_count_is_printed_bare() {
    let out = ao(&["exact", "ao", "--parts", "3,3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "230\n");
}

#[test]
fn constants_match_known_digits() {
    let out = ao(&["constants", "--kind", "fermi"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("c_d = -0.323697314095"), "{text}");
    assert!(text.contains("C_d = 0.905729821720"), "{text}");
}

#[test]
fn json_report_is_valid() {
    let out = ao(&["--json", "exact", "hs", "--parts", "2,2", "--s", "2"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["results"]["h_s"], "78");
    assert_eq!(v["command"], "--json exact hs --parts 2,2 --s 2");
}

#[test]
fn verify_is_deterministic_and_exits_zero() {
    let args = ["verify", "all", "--json"];
    let (a, b) = (ao(&args), ao(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["summary"]["failed"], 0);
    assert_eq!(v["tables"].as_array().unwrap().len(), 10);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(ao(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(ao(&["mc", "runs", "--parts", "2,2"]).status.code(), Some(2));
    assert_eq!(ao(&["verify", "nonexistent"]).status.code(), Some(2));
    assert_eq!(ao(&["constants", "--kind", "fermi", "--cutoff", "1"]).status.code(), Some(2));
}
