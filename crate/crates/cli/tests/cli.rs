use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rootloci")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn admissible_lists_case_tags() {
    let o = run(&["admissible", "--n", "4", "--degree", "6"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 5);
    assert!(text.contains("(2,2,2,0)  A  pivot 1  companion (3,1,1,1)"));
    let json: Value = serde_json::from_str(&stdout(&run(&["admissible", "--n", "4", "--degree", "6", "--format", "json"]))).unwrap();
    assert_eq!(json["schema"], 1);
    assert_eq!(json["partitions"].as_array().unwrap().len(), 5);
}

#[test]
fn hilbert_rows_agree() {
    let o = run(&["hilbert", "--n", "4", "--max-degree", "14", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,d,dim,admissible_count,series_coeff"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 15);
    for r in rows {
        assert!(r[2] == r[3] && r[3] == r[4], "{r:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["macdonald", "--n", "4", "--lambda", "3,1", "--t0", "5/3", "--format", "json"];
    let a = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, run(&args).stdout);
    let json: Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!((json["symbol"].as_str(), json["t0"].as_str()), (Some("q"), Some("5/3")));
}

#[test]
fn interpolation_json_is_flagged() {
    let o = run(&["interp", "--n", "2", "--lambda", "1", "--symbolic", "--format", "json"]);
    let json: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["inhomogeneous"], true);
    assert_eq!(json["symbol"], "theta");
    assert_eq!(json["terms"][1]["num"], "-theta");
}

#[test]
fn generator_degrees_for_four_variables() {
    let o = run(&["gendeg", "--n", "4", "--max-degree", "12", "--format", "json"]);
    let json: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let degrees: Vec<u64> = json["degrees"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect();
    assert_eq!(degrees, (3..=9).collect::<Vec<_>>());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["macdonald", "--n", "4", "--lambda", "2", "--t0", "-1"],
        vec!["jack", "--n", "2", "--lambda", "1,2"],
        vec!["jack", "--n", "2", "--lambda", "1,1,1"],
        vec!["hilbert", "--n", "4", "--max-degree", "3", "--mod-prime", "1073741827000"],
        vec!["gendeg", "--n", "4", "--max-degree", "5", "--p", "7"],
        vec!["nonsense"],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_scoped_to_four_variables_passes() {
    let o = run(&["verify", "--n", "4", "--t0", "2", "--t0", "3/2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.contains(" PASS ")).count(), 16);
}

#[test]
fn verify_reports_failure_with_exit_one() {
    let o = run(&["verify", "--n", "5", "--criterion", "11"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}
