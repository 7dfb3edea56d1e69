//! End-to-end checks of the binary surface: subcommands, formats, exit
//! codes, and the environment-variable cap override.

use std::process::{Command, Output};

fn chardeg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chardeg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn table_alt5_lists_degrees_and_fields_in_order() {
    let output = chardeg(&["table", "alt:5"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    let mut rows = Vec::new();
    // Header: the order line, class representatives, sizes, element orders.
    for line in text.lines().skip(4) {
        let mut cells = line.split_whitespace();
        let degree: u64 = cells.next().unwrap().parse().unwrap();
        let field = cells.next().unwrap().to_string();
        rows.push((degree, field));
    }
    let degrees: Vec<u64> = rows.iter().map(|(d, _)| *d).collect();
    let fields: Vec<&str> = rows.iter().map(|(_, f)| f.as_str()).collect();
    assert_eq!(degrees, vec![1, 3, 3, 4, 5]);
    assert_eq!(fields, vec!["Q", "R", "R", "Q", "Q"]);
}

#[test]
fn table_json_has_classes_and_characters() {
    let output = chardeg(&["table", "sym:3", "--format", "json"]);
    assert_eq!(output.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["classes"].as_array().unwrap().len(), 3);
    let characters = value["characters"].as_array().unwrap();
    assert_eq!(characters.len(), 3);
    assert_eq!(characters[2]["degree"], 2);
    assert_eq!(characters[2]["field"], "Q");
    assert_eq!(characters[2]["values"][2], "-1");
}

#[test]
fn acd_prints_theorem_d_sharp_line() {
    let output = chardeg(&["acd", "sl2:5", "--field", "C", "--normal", "all"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(
        text.contains("N=Z (order 2): acd_even = 7/2"),
        "missing sharp line in:\n{text}"
    );
    assert!(text.contains("N=G (order 120): acd_even = 18/5"));
}

#[test]
fn acd_single_normal_index_view() {
    // Index 1 is the first nontrivial normal subgroup: the center of SL2(5).
    let output = chardeg(&["acd", "sl2:5", "--normal", "1", "--field", "r"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("N=Z (order 2): acd_even = 7/2"), "got:\n{text}");
    assert!(!text.contains("N=G (order 120)"), "single view leaked other subgroups");
}

#[test]
fn acd_json_matches_schema() {
    let output = chardeg(&["acd", "sl2:5", "--format", "json"]);
    assert_eq!(output.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["group"], "sl2:5");
    assert_eq!(value["order"], 120);
    assert_eq!(value["solvable"], false);
    assert_eq!(value["acd"], "10/3");
    assert_eq!(value["acd_star"]["C"], "29/8");
    assert_eq!(value["acd_star"]["R"], "29/8");
    let per_normal = value["per_normal"].as_array().unwrap();
    assert_eq!(per_normal.len(), 2);
    assert_eq!(per_normal[0]["order"], 2);
    assert_eq!(per_normal[0]["acd_even"]["C"], "7/2");
    assert_eq!(per_normal[0]["even_counts"]["C"], 4);
    assert_eq!(per_normal[0]["histograms"]["C"]["2"], 2);
    // Rational even rows relative to N = G: both degree-4 rows and the 6.
    assert_eq!(per_normal[1]["order"], 120);
    assert_eq!(per_normal[1]["acd_even"]["Q"], "14/3");
    assert_eq!(per_normal[1]["acd_rel"], "29/8");
}

#[test]
fn normals_json_matches_schema() {
    let output = chardeg(&["normals", "sl2:5", "--format", "json"]);
    assert_eq!(output.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    let entries = value.as_array().unwrap();
    let orders: Vec<u64> = entries.iter().map(|e| e["order"].as_u64().unwrap()).collect();
    assert_eq!(orders, vec![1, 2, 120]);
    assert_eq!(entries[1]["solvable"], true);
    assert_eq!(entries[2]["solvable"], false);
    assert!(entries[1]["class_indices"].is_array());
}

#[test]
fn verify_single_group_csv_renders_exact_rationals() {
    let output = chardeg(&["verify", "--spec", "sl2:5", "--format", "csv"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.starts_with("group,theorem,value,bound,hypothesis,conclusion,ok,sharp"));
    assert!(text.contains("sl2:5,A1,29/8,29/8,false,false,true,true"));
    assert!(text.contains("sl2:5,D1,7/2,7/2,false,false,true,true"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(chardeg(&["table", "frobnicate:3"]).status.code(), Some(2));
    assert_eq!(chardeg(&["table", "alt:not-a-number"]).status.code(), Some(2));
    assert_eq!(chardeg(&["verify", "--corpus", "nonexistent"]).status.code(), Some(2));
    assert_eq!(chardeg(&["acd", "sym:3", "--normal", "99"]).status.code(), Some(2));
    assert_eq!(chardeg(&["no-such-subcommand"]).status.code(), Some(2));
}

#[test]
fn order_cap_flag_and_env_are_honored() {
    let capped = chardeg(&["table", "sym:6", "--max-order", "100"]);
    assert_eq!(capped.status.code(), Some(2));
    let stderr = String::from_utf8(capped.stderr).unwrap();
    assert!(stderr.contains("cap"), "stderr: {stderr}");

    let env_capped = Command::new(env!("CARGO_BIN_EXE_chardeg"))
        .args(["table", "sym:6"])
        .env("CHARDEG_MAX_ORDER", "100")
        .output()
        .unwrap();
    assert_eq!(env_capped.status.code(), Some(2));

    // An explicit flag wins over the environment.
    let flag_wins = Command::new(env!("CARGO_BIN_EXE_chardeg"))
        .args(["table", "sym:6", "--max-order", "1000"])
        .env("CHARDEG_MAX_ORDER", "100")
        .output()
        .unwrap();
    assert_eq!(flag_wins.status.code(), Some(0));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("chardeg-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.txt");
    let output = chardeg(&["table", "sym:3", "--out", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    assert!(output.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.contains("order 6"));
    std::fs::remove_file(&path).unwrap();
}
