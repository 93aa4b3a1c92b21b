use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn indcx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_indcx"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gen_to(dir: &Path, name: &str, args: &[&str]) -> String {
    let o = indcx(&[&["gen"], args].concat());
    assert!(o.status.success());
    let p = dir.join(name);
    std::fs::write(&p, o.stdout).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn rainbow_number_as_json() {
    let dir = tempfile::tempdir().unwrap();
    let g = gen_to(dir.path(), "d.edges", &["dodecahedral"]);
    let o = indcx(&[
        "--format", "json", "fnum", "--graph", &g, "--n", "8", "--cap", "20",
    ]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["f"], 11);
    assert_eq!(v["certificate"], "exhaustive");
    assert_eq!(v["witness_family"].as_array().unwrap().len(), 10);
}

#[test]
fn betti_json_is_a_degree_map() {
    let dir = tempfile::tempdir().unwrap();
    let g = gen_to(dir.path(), "c6.edges", &["cycle", "6"]);
    let o = indcx(&["--format", "json", "betti", "--graph", &g, "--n", "3"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["3"], 1);
    assert_eq!(v["-1"], 0);
}

#[test]
fn witness_round_trip_and_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let g = gen_to(dir.path(), "c4.edges", &["cycle", "4"]);
    let o = indcx(&[
        "--format", "json", "collapse", "search", "--graph", &g, "--n", "2", "--d", "2",
    ]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["outcome"], "witness");
    let steps = v["witness"]["steps"].clone();
    let w = dir.path().join("w.json");
    std::fs::write(&w, steps.to_string()).unwrap();
    let w = w.to_str().unwrap();
    let ok = indcx(&[
        "collapse",
        "verify",
        "--graph",
        &g,
        "--n",
        "2",
        "--witness",
        w,
        "--d",
        "2",
    ]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    let bad = indcx(&[
        "collapse",
        "verify",
        "--graph",
        &g,
        "--n",
        "2",
        "--witness",
        w,
        "--d",
        "1",
    ]);
    assert_eq!(bad.status.code(), Some(1));

    let refuted = indcx(&["collapse", "search", "--graph", &g, "--n", "2", "--d", "1"]);
    assert!(stdout(&refuted).contains("not 1-collapsible"));
}

#[test]
fn complex_files_are_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("x.cx");
    std::fs::write(&p, "ground 4\nmissing 2\n0 2\n1 3\n").unwrap();
    let p = p.to_str().unwrap();
    let o = indcx(&["leray", "--complex", p]);
    assert_eq!(stdout(&o), "L = 2\n");
    let o = indcx(&["collapse", "number", "--complex", p]);
    assert_eq!(stdout(&o), "C = 2\n");
}

#[test]
fn parse_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.edges");
    std::fs::write(&p, "3 1\n0 7\n").unwrap();
    let o = indcx(&["betti", "--graph", p.to_str().unwrap(), "--n", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert!(o.stdout.is_empty());
    assert_eq!(indcx(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn refusals_are_structured() {
    let dir = tempfile::tempdir().unwrap();
    let g = gen_to(dir.path(), "k4.edges", &["complete", "4"]);
    let o = indcx(&[
        "--format",
        "json",
        "betti",
        "--graph",
        &g,
        "--n",
        "2",
        "--method",
        "dual-nerve",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(String::from_utf8_lossy(&o.stderr).trim()).unwrap();
    assert!(v["error"].as_str().unwrap().contains("non-complete"));
}

#[test]
fn quick_reproduction_suite_passes() {
    let o = indcx(&["verify-paper", "quick"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(
        stdout(&o)
            .lines()
            .filter(|l| l.starts_with("[pass]"))
            .count(),
        9
    );
}
