use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_noncrossed")).args(args).output().expect("binary runs")
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/data").join(name)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(cmd: &str) {
    let o = bin(&["--json", cmd]);
    assert_eq!(o.status.code(), Some(0));
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{cmd}.json"));
    let expected = std::fs::read_to_string(path).unwrap();
    assert_eq!(stdout(&o), expected);
}

#[test]
fn example8_matches_golden_report() {
    golden("example8");
}

#[test]
fn example9_matches_golden_report() {
    golden("example9");
}

#[test]
fn example16_passes() {
    let o = bin(&["example16"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("pass x3.sign_flip"));
    assert!(out.ends_with("overall: pass\n"));
}

#[test]
fn mutations_exit_with_one() {
    for (cmd, m) in [("example8", "u-times-2"), ("example9", "frobenius-tau-squared"), ("example9", "w2-one-third"), ("example16", "no-sign-flip")] {
        let o = bin(&[cmd, "--mutate", m]);
        assert_eq!(o.status.code(), Some(1), "{cmd} {m}");
        assert!(stdout(&o).contains("overall: fail"));
    }
    let o = bin(&["--json", "example8", "--mutate", "u-times-2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["overall"], "fail");
    let rel5 = v["checks"].as_array().unwrap().iter().find(|c| c["id"] == "abel.rel5.norm").unwrap();
    assert_eq!(rel5["status"], "fail");
}

#[test]
fn json_and_text_agree_on_verdicts() {
    let text = stdout(&bin(&["example9", "--mutate", "frobenius-tau-squared"]));
    let v: serde_json::Value = serde_json::from_str(&stdout(&bin(&["--json", "example9", "--mutate", "frobenius-tau-squared"]))).unwrap();
    for c in v["checks"].as_array().unwrap() {
        let line = format!("  {:<4} {}", c["status"].as_str().unwrap(), c["id"].as_str().unwrap());
        assert!(text.contains(&line), "{line}");
    }
}

#[test]
fn bundled_factor_set_file_passes() {
    let o = bin(&["check", "--bundle", data("example8.json").to_str().unwrap(), "--kind", "factorset"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("pass abel.rel5.norm"));
}

#[test]
fn invariants_bundle_passes() {
    let o = bin(&["check", "--bundle", data("sigma_extends.json").to_str().unwrap(), "--kind", "invariants"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn normsearch_bound_zero_finds_nothing() {
    let p = data("normsearch.json");
    let o = bin(&["--verbose", "check", "--bundle", p.to_str().unwrap(), "--kind", "normsearch", "--bound", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("none found"));
    let o = bin(&["check", "--bundle", p.to_str().unwrap(), "--kind", "normsearch", "--bound", "2"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn malformed_input_exits_with_two() {
    let dir = std::env::temp_dir().join(format!("noncrossed-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{ \"places\": [").unwrap();
    let o = bin(&["check", "--bundle", bad.to_str().unwrap(), "--kind", "invariants"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    let o = bin(&["check", "--bundle", dir.join("missing.json").to_str().unwrap(), "--kind", "certificate"]);
    assert_eq!(o.status.code(), Some(2));
    let o = bin(&["example8", "--mutate", "no-sign-flip"]);
    assert_eq!(o.status.code(), Some(2));
    let o = bin(&["check", "--bundle", bad.to_str().unwrap(), "--kind", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(dir).unwrap();
}
