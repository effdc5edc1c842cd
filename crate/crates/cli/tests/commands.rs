use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn besselsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_besselsum"))
        .args(args)
        .env_remove("BESSELSUM_TOL")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn keys(v: &Value) -> Vec<String> {
    let mut k: Vec<String> = v.as_object().unwrap().keys().cloned().collect();
    k.sort();
    k
}

#[test]
fn eval_half_order_matches_closed_form() {
    let out = besselsum(&["eval", "--kind", "S", "--nu", "-0.5", "--p", "1", "--a", "0.1", "--x", "1", "--method", "auto"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let a: f64 = 0.1;
    let want = (a.exp() * a.cos() - 1.0) / ((1.0 - 2.0 * a.exp() * a.cos() + (2.0 * a).exp()) * std::f64::consts::PI.sqrt());
    let got = v["value"].as_f64().unwrap();
    assert!(((got - want) / want).abs() < 1e-12, "{got} vs {want}");
    assert_eq!(keys(&v), ["certified", "convergence_class", "error_estimate", "method", "terms_used", "value"]);
}

#[test]
fn eval_single_surviving_term() {
    let out = besselsum(&["eval", "--kind", "S", "--nu", "0", "--p", "2", "--a", "10", "--x", "1e-12", "--method", "expansion"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let got = v["value"].as_f64().unwrap();
    assert!((got - (-10f64).exp()).abs() < 1e-15);
    assert_eq!(v["method"], "expansion");
}

#[test]
fn domain_error_exits_with_two() {
    let out = besselsum(&["eval", "--kind", "T", "--nu", "0", "--p", "1", "--a", "1", "--x", "1.5"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["error"], "DomainError");
    assert!(v["detail"].as_str().unwrap().contains("(0,1)"));
    let out = besselsum(&["eval", "--kind", "S", "--nu", "0", "--p", "4", "--a", "1", "--x", "1", "--method", "expansion"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"], "EvenPError");
}

#[test]
fn unreadable_config_exits_with_one() {
    let out = besselsum(&["sweep", "--config", "/nonexistent/besselsum.cfg"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cannot read config"));
}

#[test]
fn compare_examples_within_tolerance() {
    for args in [
        ["--nu", "0", "--p", "0.5", "--a", "0.05", "--x", "1"],
        ["--nu", "-0.5", "--p", "2", "--a", "1", "--x", "1"],
    ] {
        let mut full = vec!["compare", "--kind", "S"];
        full.extend(args);
        let out = besselsum(&full);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(json(&out)["within_tolerance"], true, "{args:?}");
    }
    let out = besselsum(&["compare", "--kind", "S", "--nu", "0", "--p", "1.5", "--a", "0.01", "--x", "0.5"]);
    let v = json(&out);
    let budget = v["direct"]["error_estimate"].as_f64().unwrap() + v["expansion"]["error_estimate"].as_f64().unwrap();
    assert!(v["abs_diff"].as_f64().unwrap() <= 10.0 * budget);
}

#[test]
fn sweep_csv_rows_and_header() {
    let out = besselsum(&["sweep", "--nu", "0", "--p", "1", "--a", "0.1,0.2,0.4", "--x", "0.5,1,2", "--method", "both"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "nu,p,a,x,mu,kind,method,value,error_estimate,terms_used,convergence_class");
    assert_eq!(lines.len(), 19);
    assert!(lines[1].contains(",direct,") && lines[2].contains(",expansion,"));
}

#[test]
fn sweep_isolates_invalid_points() {
    let out = besselsum(&["sweep", "--kind", "T", "--nu", "0", "--p", "1", "--a", "0.5", "--x", "0.5,1.5,0.7", "--method", "direct"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[2].contains(",error,") && lines[2].contains("DomainError"));
    assert!(lines[1].contains(",direct,") && lines[3].contains(",direct,"));
}

#[test]
fn sweep_from_config_file_as_json_lines() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# shifted sums\nkind = Smu\nnu = 0.5\np = 2\na = 0.5\na = 1\nx = 0.5\nmu = 1\nmu = 0\nmethod = both\nformat = json").unwrap();
    let out = besselsum(&["sweep", "--config", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let rows: Vec<Value> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(rows.len(), 8);
    let first = keys(&rows[0]);
    assert!(rows.iter().all(|r| keys(r) == first));
    for pair in rows.chunks(2) {
        let d = pair[0]["value"].as_f64().unwrap();
        let e = pair[1]["value"].as_f64().unwrap();
        assert!(((d - e) / d).abs() < 1e-12);
    }
}

#[test]
fn direct_cost_follows_inverse_power() {
    let out = besselsum(&["sweep", "--nu", "0", "--p", "1", "--a", "0.1,0.01,0.001,0.0001", "--x", "1", "--method", "direct"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let pts: Vec<(f64, f64)> = reader
        .records()
        .map(|r| {
            let r = r.unwrap();
            (r[2].parse().unwrap(), r[9].parse().unwrap())
        })
        .collect();
    let slope = (pts[3].1 / pts[0].1).ln() / (pts[3].0 / pts[0].0).ln();
    assert!((slope + 1.0).abs() < 0.1, "{slope}");
}

#[test]
fn bench_reports_speedup_and_exponent() {
    let out = besselsum(&["bench", "--p", "1", "--nu", "0", "--x", "1", "--a-min", "1e-4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["speedup"].as_f64().unwrap() >= 100.0);
    assert!((v["direct_exponent"].as_f64().unwrap() + 1.0).abs() <= 0.1);
    let out = besselsum(&["bench", "--p", "2", "--nu", "0", "--x", "0.5", "--a-min", "1e-3"]);
    let v = json(&out);
    assert!((v["direct_exponent"].as_f64().unwrap() + 0.5).abs() <= 0.1);
    let expansion_terms = v["records"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["method"] == "Expansion" && r["params"]["a"].as_f64().unwrap() < 2e-3)
        .map(|r| r["terms_used"].as_u64().unwrap())
        .next()
        .unwrap();
    assert!(expansion_terms <= 5);
}

#[test]
fn tolerance_from_environment() {
    let run = |tol: Option<&str>| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_besselsum"));
        c.args(["eval", "--kind", "S", "--nu", "0", "--p", "1", "--a", "0.3", "--x", "1", "--method", "direct"]);
        match tol {
            Some(t) => c.env("BESSELSUM_TOL", t),
            None => c.env_remove("BESSELSUM_TOL"),
        };
        json(&c.output().unwrap())["terms_used"].as_u64().unwrap()
    };
    assert!(run(Some("1e-4")) < run(None));
}

#[test]
fn asymptotics_commands() {
    let out = besselsum(&["verify-asymptotics", "--nu", "-0.5", "--x", "1", "--k-list", "1,2,5,10,20,30"]);
    let v = json(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 6);
    let out = besselsum(&["verify-asymptotics", "--nu", "0", "--x", "0.5", "--mode", "pos", "--k-list", "25,50,100"]);
    let v = json(&out);
    assert_eq!(v["pass"], true, "{v}");
    let r = &v["checks"][2];
    assert!((r["ratio"].as_f64().unwrap() - 1.0).abs() <= 0.05);
    let out = besselsum(&["verify-asymptotics", "--nu", "0", "--x", "1", "--mode", "remainder", "--envelope", "symmetric"]);
    let v = json(&out);
    assert_eq!(keys(&v), ["checks", "constant", "constant_half_grid", "mode", "nu", "pass", "rule", "x"]);
    assert_eq!(v["pass"], true);
}
