use std::process::{Command, Output};

use serde_json::Value;

fn verify(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_verify"));
    cmd.args(args).env_remove("VERIFY_CAP_ELEMENTS").env_remove("VERIFY_CAP_ORDER");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn list_shows_the_registry() {
    let o = verify(&["list", "--json"], &[]);
    assert_eq!(o.status.code(), Some(0));
    let list: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let ids: Vec<&str> = list.as_array().unwrap().iter().map(|s| s["id"].as_str().unwrap()).collect();
    assert!(ids.len() >= 15);
    assert!(ids.contains(&"criterion-equivalence-battery"));
    assert!(ids.contains(&"lemma11-coprime-battery"));
    let text = stdout(&verify(&["list"], &[]));
    assert!(text.contains("search-nonpronormal-c3-wr-s3 [exploratory]"));
}

#[test]
fn run_prints_a_passing_report() {
    let o = verify(&["run", "norm-syl-psl2-5"], &[]);
    assert_eq!(o.status.code(), Some(0));
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["status"], "pass");
    assert_eq!(report["measured"]["ns_order"], 12);
}

#[test]
fn run_writes_json_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = verify(&["run", "maz-frobenius-5-4", "--json", path.to_str().unwrap()], &[]);
    assert_eq!(o.status.code(), Some(0));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["id"], "maz-frobenius-5-4");
    assert_eq!(report["measured"]["min_poly"], "λ^4 + 1");
}

#[test]
fn usage_errors_exit_with_3() {
    assert_eq!(verify(&["run", "no-such-scenario"], &[]).status.code(), Some(3));
    assert_eq!(verify(&["frobnicate"], &[]).status.code(), Some(3));
    assert_eq!(verify(&["run", "norm-syl-psl2-5", "--cap-order", "x"], &[]).status.code(), Some(3));
    assert_eq!(verify(&["all", "--filter", "nothing-matches-*"], &[]).status.code(), Some(3));
    assert_eq!(verify(&["run", "norm-syl-psl2-5"], &[("VERIFY_CAP_ORDER", "lots")]).status.code(), Some(3));
    assert_eq!(verify(&["--help"], &[]).status.code(), Some(0));
}

#[test]
fn caps_from_flags_env_and_config() {
    // flag
    let o = verify(&["run", "norm-syl-psl2-13", "--cap-order", "100"], &[]);
    assert_eq!(o.status.code(), Some(2));
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["status"], "truncated");
    assert_eq!(report["caps"]["order"], 100);
    // environment
    let o = verify(&["run", "norm-syl-psl2-13"], &[("VERIFY_CAP_ORDER", "100")]);
    assert_eq!(o.status.code(), Some(2));
    // config overrides the environment, flags override the config
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("caps.toml");
    std::fs::write(&config, "[defaults]\norder = 50\n\n[scenarios.\"norm-syl-psl2-13\"]\norder = 2000\n").unwrap();
    let cfg = config.to_str().unwrap();
    let o = verify(&["all", "--filter", "norm-syl-psl2-*", "--config", cfg], &[("VERIFY_CAP_ORDER", "10")]);
    assert_eq!(o.status.code(), Some(2));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("pass") && l.contains("norm-syl-psl2-13")));
    assert!(text.lines().any(|l| l.starts_with("truncated") && l.contains("norm-syl-psl2-11")));
    let o = verify(&["all", "--filter", "norm-syl-psl2-*", "--config", cfg, "--cap-order", "5000"], &[]);
    assert_eq!(o.status.code(), Some(0));
    // malformed config
    std::fs::write(&config, "[defaults]\nbogus = 1\n").unwrap();
    assert_eq!(verify(&["list"], &[]).status.code(), Some(0));
    assert_eq!(verify(&["run", "norm-syl-psl2-5", "--config", cfg], &[]).status.code(), Some(3));
}

#[test]
fn all_with_filter_and_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("all.json");
    let o = verify(&["all", "--filter", "wreath-*", "--jobs", "3", "--json", path.to_str().unwrap()], &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("passed 6 failed 0 truncated 0 unreachable 0"));
    let summary: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(summary["reports"].as_array().unwrap().len(), 6);
    // unreachable scenarios do not change the exit code
    let o = verify(&["all", "--filter", "nonpronormal-*"], &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("unreachable 1"));
}
