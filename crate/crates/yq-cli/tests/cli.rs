//! The `yq` binary and its library: exit codes, reports and `eval`.

use std::process::{Command, Output};

use yq_cli::{Calculator, CalcError, RunConfig, SuiteName};

fn yq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_yq")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn eval_of_one_prints_one() {
    let o = yq(&["eval", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn eval_normal_orders_and_truncates() {
    let calc = Calculator::new(1, 2);
    // Reordering t[-1,1,1] t[1,1,1] produces a commutator term.
    let p = calc.eval("t[-1,1,1] t[1,1,1] - t[1,1,1] t[-1,1,1]").unwrap();
    assert_eq!(p, calc.eval("[t[-1,1,1], t[1,1,1]]").unwrap());
    // Degree 3 products vanish at order 2.
    assert_eq!(calc.eval("t[1,1,1] t[1,1,2]").unwrap().to_string(), "0");
    assert_eq!(calc.eval("1/2 * 4 - (2)").unwrap().to_string(), "0");
    assert_eq!(calc.eval("t[1,1,0] + t[-1,1,0]").unwrap().to_string(), "1");
}

#[test]
fn eval_reads_gauss_coefficients() {
    let calc = Calculator::new(2, 3);
    // h_1(u) = t_11(u) and e_1(u) = t_11(u)^{-1} t_12(u) to first order.
    assert_eq!(calc.eval("h[1,1] - t[1,1,1]").unwrap().to_string(), "0");
    assert_eq!(calc.eval("e[1,1] - t[1,2,1]").unwrap().to_string(), "0");
    assert_eq!(calc.eval("f[1,1] - f[2,1,1]").unwrap().to_string(), "0");
    assert!(matches!(calc.eval("h[3,1]"), Err(CalcError::Range(_))));
    assert!(matches!(calc.eval("e[1,2,9]"), Err(CalcError::Range(_))));
}

#[test]
fn parse_errors_report_their_column() {
    let calc = Calculator::new(1, 3);
    assert_eq!(
        calc.eval("t[1,1,1] + * 2"),
        Err(CalcError::Parse { column: 12, message: "expected a number, generator, bracket or '('".into() })
    );
    assert!(matches!(calc.eval("q[1]"), Err(CalcError::Parse { column: 1, .. })));
    let o = yq(&["eval", "(t[1,1,1]"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("column 10"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(yq(&["verify", "--n", "2", "--suite", "serre"]).status.code(), Some(2));
    assert_eq!(yq(&["verify", "--order", "1"]).status.code(), Some(2));
    assert_eq!(yq(&["verify", "--n", "0"]).status.code(), Some(2));
    assert_eq!(yq(&["verify", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn config_defaults_and_validation() {
    let c = RunConfig::new(2, 4, &[]);
    assert!(!c.suites.contains(&SuiteName::Serre));
    assert_eq!(RunConfig::new(3, 4, &[]).suites.len(), SuiteName::ALL.len());
    let c = RunConfig::new(1, 4, &[SuiteName::Center, SuiteName::Tensor, SuiteName::Center]);
    assert_eq!(c.suites, vec![SuiteName::Tensor, SuiteName::Center]);
    assert!(c.validate().is_ok());
}

#[test]
fn passing_suites_exit_with_zero() {
    let o = yq(&["verify", "--n", "1", "--order", "3", "--suite", "tensor", "--suite", "rtt", "--suite", "gauss"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("summary:"));
}

#[test]
fn failures_and_preconditions_have_distinct_codes() {
    // The printed form of one center identity fails.
    assert_eq!(yq(&["verify", "--n", "1", "--order", "3", "--suite", "center"]).status.code(), Some(1));
    // One embedding relation divides by u + v without the numerator vanishing.
    assert_eq!(yq(&["verify", "--n", "2", "--order", "3", "--suite", "embedding"]).status.code(), Some(3));
}

#[test]
fn json_report_is_deterministic_apart_from_timing() {
    let dir = std::env::temp_dir().join(format!("yq-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let args = ["verify", "--n", "2", "--order", "3", "--suite", "center", "--suite", "drinfeld", "--format", "json"];
    let o = yq(&[&args[..], &["--report", path.to_str().unwrap(), "--threads", "2"]].concat());
    assert_eq!(o.status.code(), Some(1));
    let mut a: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let mut b: serde_json::Value = serde_json::from_str(&stdout(&yq(&args))).unwrap();
    assert_eq!(a["schema"], 1);
    assert!(a["timing"]["total_seconds"].is_number());
    for v in [&mut a, &mut b] {
        let obj = v.as_object_mut().unwrap();
        obj.remove("timing");
        obj["config"].as_object_mut().unwrap().remove("threads");
    }
    assert_eq!(a, b);
    let ids: Vec<&str> = a["results"].as_array().unwrap().iter().map(|r| r["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    let center = &a["center"];
    assert_eq!(center["routes_equal"], true);
    assert_eq!(center["z"][0], "1");
    assert_eq!(center["z"][2], "-2 * t[1,1,1] + -2 * t[2,2,1]");
    assert!(center["centrality"].as_array().unwrap().iter().all(|c| c["commutes"] == true));
    assert!(a["bindings"]["hprime"].as_str().unwrap().contains("H_a(u)^-1"));
    std::fs::remove_dir_all(&dir).unwrap();
}
