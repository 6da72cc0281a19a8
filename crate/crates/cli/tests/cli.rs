use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_c2webs")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn homdim_of_two_vector_strands() {
    let o = run(&["homdim", "11", "11"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "3");
}

#[test]
fn relations_hold_at_q_equal_one() {
    let o = run(&["check-relations", "--field", "QQ", "--q", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn basis_check_mod_seven_reports_rank() {
    let o = run(&["basis-check", "12", "21", "--field", "Fp", "--p", "7", "--q", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("rank 2 of 2"), "{}", stdout(&o));
}

#[test]
fn degenerate_specialisation_is_a_usage_error() {
    let o = run(&["basis-check", "12", "21", "--field", "Fp", "--p", "5", "--q", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("q + q^-1 = 0"));
}

#[test]
fn malformed_words_and_missing_parameters_exit_two() {
    assert_eq!(run(&["homdim", "13", "1"]).status.code(), Some(2));
    assert_eq!(run(&["check-relations", "--field", "Fp", "--q", "2"]).status.code(), Some(2));
    assert_eq!(run(&["lightladder", "21", "1,0", "1,0"]).status.code(), Some(2));
}

#[test]
fn json_reports_round_trip() {
    let o = run(&["triangularity", "11", "--lambda", "0,1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["check"], "triangularity");
    assert_eq!(v["verdict"], true);
    assert_eq!(v["params"]["matrix"][0][0], "-1");
    let back: c2webs::report::Report = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(serde_json::to_value(&back).unwrap(), v);
}

#[test]
fn light_ladder_json_evaluates_from_a_file() {
    let o = run(&["lightladder", "21", "0,1", "1,-1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let dir = std::env::temp_dir().join(format!("c2webs-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ladder.json");
    std::fs::write(&path, &o.stdout).unwrap();
    let e = run(&["eval", "--file", path.to_str().unwrap(), "--json"]);
    assert_eq!(e.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&e)).unwrap();
    let hit = v["entries"].as_array().unwrap().iter().any(|x| {
        x["row"] == serde_json::json!([[1, 0]]) && x["col"] == serde_json::json!([[0, 1], [1, -1]]) && x["value"] == "-1"
    });
    assert!(hit, "{v}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn out_flag_writes_the_file() {
    let path = std::env::temp_dir().join(format!("c2webs-homdim-{}.txt", std::process::id()));
    let o = run(&["homdim", "2", "11", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&path).unwrap().trim(), "1");
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn cellularity_uses_the_seed_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_c2webs"))
        .args(["cellularity", "11", "11", "--lambda", "0,0", "--json"])
        .env("WEBS_SEED", "17")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["params"]["seed"], 17);
}
