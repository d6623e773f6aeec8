//! Runs the built binary and checks output, exit codes and round-trips.

use std::process::{Command, Output};

use serde_json::Value;
use zpz_entropy::serial::{fn_from_value, parse_fn};

const COIN: &str = r#"{"domain":{"kind":"integers"},"pmf":[[0,"1/2"],[1,"1/2"]]}"#;
const TRIANGLE: &str = r#"{"domain":{"kind":"integers"},"pmf":[[-1,"1/4"],[0,"1/2"],[1,"1/4"]]}"#;
const MIXED: &str = r#"{"domain":{"kind":"cyclic","p":7},"pmf":[[0,"1/2"],[2,"1/3"],[3,"1/6"]]}"#;

fn zpz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zpz")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = zpz(&all);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn lowerbound_on_two_coins() {
    let v = json(&["lowerbound", COIN, COIN]);
    assert_eq!(fn_from_value(&v["extremal"]).unwrap(), parse_fn(TRIANGLE).unwrap());
    let h = 1.5 * std::f64::consts::LN_2;
    let e = &v["entropies"][0];
    assert!((e["lhs"].as_f64().unwrap() - h).abs() < 1e-12);
    assert!((e["extremal"].as_f64().unwrap() - h).abs() < 1e-12);
}

#[test]
fn cauchy_davenport_line() {
    let o = zpz(&["cd", "-p", "5", "--a", "0,1", "--b", "0,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("4 ≥ 3 PASS"));
}

#[test]
fn min_entropy_in_nats_and_bits() {
    let v = json(&["entropy", "--alpha", "inf", TRIANGLE]);
    assert!((v["entropies"][0]["value"].as_f64().unwrap() - std::f64::consts::LN_2).abs() < 1e-12);
    let v = json(&["entropy", "--alpha", "inf", "--bits", TRIANGLE]);
    assert!((v["entropies"][0]["value"].as_f64().unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn emitted_distributions_reparse() {
    let original = parse_fn(MIXED).unwrap();
    for sign in ["plus", "minus"] {
        let v = json(&["rearrange", "--sign", sign, MIXED]);
        let back = fn_from_value(&v["result"]).unwrap();
        assert_eq!(back.values_desc(), original.values_desc());
        // The human form prints the canonical line, which must parse to the same value.
        let o = zpz(&["rearrange", "--sign", sign, MIXED]);
        let line = stdout(&o).lines().nth(1).unwrap().to_string();
        assert_eq!(parse_fn(&line).unwrap(), back);
    }
    let v = json(&["decompose", MIXED]);
    let t = fn_from_value(&v["triangle"]).unwrap();
    let s = fn_from_value(&v["square"]).unwrap();
    assert_eq!(t.add(&s).unwrap(), original);
    let v = json(&["lowerbound", MIXED, MIXED]);
    for key in ["lhs", "extremal"] {
        let f = fn_from_value(&v[key]).unwrap();
        assert_eq!(fn_from_value(&zpz_entropy::serial::fn_to_value(&f)).unwrap(), f);
    }
}

#[test]
fn reads_distributions_from_files() {
    let dir = std::env::temp_dir().join(format!("zpz-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("coin.json");
    std::fs::write(&path, COIN).unwrap();
    let p = path.to_str().unwrap();
    let v = json(&["lowerbound", p, COIN]);
    assert_eq!(fn_from_value(&v["extremal"]).unwrap(), parse_fn(TRIANGLE).unwrap());
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn csv_sweeps_have_the_plot_columns() {
    let o = zpz(&["lo", "--coeffs", "1,-2,3", COIN, "--alpha", "0,1,inf", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("instance,alpha,lhs,rhs,gap"));
    assert_eq!(lines.count(), 3);
    let o = zpz(&["gap", "2", "--to", "50", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().count(), 50);
}

#[test]
fn application_commands_report_verdicts() {
    let v = json(&["count", "--set", "0,1", "--set", "0,1", "--coeffs", "1,1"]);
    assert_eq!(v["solutions"], "6");
    assert_eq!(v["maximum"], "6");
    let v = json(&["epi", "--a", "0,1", "--b", "0,1"]);
    assert!((v["slack"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    let v = json(&["kanter", "--x", "0", "--q", "0,0"]);
    assert_eq!(v["values"][0]["G"].as_f64(), Some(1.0));
    assert_eq!(v["check"]["probability"], "1/2");
    let v = json(&["oracle", "--mode", "smallball", "--coeffs", "1,2", COIN]);
    assert_eq!(v["brute"], "1/4");
    let v = json(&["oracle", "--mode", "extremal", "--trials", "30", "-p", "7"]);
    assert_eq!(v["passed"], true);
    let v = json(&["oracle", "--mode", "perm", MIXED, MIXED, "--alpha", "1,2,inf"]);
    assert_eq!(v["results"].as_array().unwrap().len(), 3);
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(zpz(&["entropy", "{not json"]).status.code(), Some(2));
    assert_eq!(zpz(&["entropy", "/no/such/file.json"]).status.code(), Some(2));
    let unnormalized = r#"{"domain":{"kind":"integers"},"pmf":[[0,"1/2"]]}"#;
    assert_eq!(zpz(&["entropy", unnormalized]).status.code(), Some(2));
    assert_eq!(zpz(&["entropy", "--alpha", "-1", COIN]).status.code(), Some(2));
    assert_eq!(zpz(&["cd", "-p", "4", "--a", "0", "--b", "0"]).status.code(), Some(2));
    assert_eq!(zpz(&["gap", "1"]).status.code(), Some(2));
    // Not regular and in rearranged position.
    let spread = r#"{"domain":{"kind":"integers"},"pmf":[[0,"1/2"],[5,"1/2"]]}"#;
    assert_eq!(zpz(&["lo", "--coeffs", "1,1", spread]).status.code(), Some(2));
    assert_eq!(zpz(&["selftest", "--criterion", "11"]).status.code(), Some(2));
}

#[test]
fn selftest_is_deterministic_for_a_seed() {
    let strip = |v: Value| -> Vec<(Value, Value, Value)> {
        v["criteria"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| (c["criterion"].clone(), c["passed"].clone(), c["detail"].clone()))
            .collect()
    };
    let args = ["selftest", "--criterion", "2,7,9", "--seed", "17"];
    let first = strip(json(&args));
    let second = strip(json(&args));
    assert_eq!(first, second);
    assert!(first.iter().all(|(_, passed, _)| passed == true));
}
