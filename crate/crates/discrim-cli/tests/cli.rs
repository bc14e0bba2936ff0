//! End-to-end tests against the compiled binary.

use std::process::{Command, Output};

fn discrim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_discrim"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

fn json(output: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(output)).expect("valid JSON on stdout")
}

fn row_value(table: &str, key: &str) -> String {
    table
        .lines()
        .find(|l| l.starts_with(key))
        .unwrap_or_else(|| panic!("no '{key}' row in:\n{table}"))
        .split_whitespace()
        .skip(1)
        .collect::<Vec<_>>()
        .join(" ")
}

#[test]
fn degree_table_with_dominance_warning() {
    let out = discrim(&["degree", "--group", "GL8", "--weight", "L:1,1,1,0,0,0,0,0"]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let table = stdout(&out);
    assert_eq!(row_value(&table, "degree"), "16");
    assert_eq!(row_value(&table, "hypersurface"), "true");
    assert!(stderr(&out).contains("not dominant"));
}

#[test]
fn degree_json_is_deterministic_and_exact() {
    let args = [
        "degree",
        "--group",
        "GL8",
        "--weight",
        "L:0,0,0,0,0,1,1,1",
        "--output",
        "json",
        "--seed",
        "5",
    ];
    let first = discrim(&args);
    let second = discrim(&args);
    assert!(first.status.success());
    assert_eq!(
        first.stdout, second.stdout,
        "same seed must give identical bytes"
    );

    let v = json(&first);
    assert_eq!(v["degree"], 16);
    assert_eq!(v["hypersurface"], true);
    assert_eq!(v["epsilon"], -1);
    assert_eq!(v["stabilizer_order"], 720);
    assert_eq!(v["methods"], serde_json::json!(["orbit"]));
    assert_eq!(v["weight_L"].as_array().unwrap().len(), 8);
    assert_eq!(v["weight_y"].as_array().unwrap().len(), 7);
}

#[test]
fn six_methods_cross_check() {
    let out = discrim(&[
        "degree",
        "--group",
        "GL3",
        "--weight",
        "L:0,1,2",
        "--method",
        "orbit",
        "--method",
        "symmetric",
        "--method",
        "fg",
        "--method",
        "jacobi",
        "--method",
        "permanent",
        "--method",
        "scalar-product",
        "--output",
        "json",
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["degree"], 6);
    assert_eq!(
        v["methods"],
        serde_json::json!([
            "orbit",
            "symmetric",
            "fg",
            "jacobi",
            "permanent",
            "scalar-product"
        ])
    );
}

#[test]
fn exceptional_group_regular_weight() {
    let out = discrim(&[
        "degree", "--group", "G2", "--weight", "w:1,1", "--output", "json",
    ]);
    assert!(out.status.success());
    assert_eq!(json(&out)["degree"], 916);
}

#[test]
fn degenerate_dual_reports_degree_zero() {
    let out = discrim(&[
        "degree", "--group", "A1", "--weight", "w:1", "--output", "json",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["degree"], 0);
    assert_eq!(v["hypersurface"], false);
}

#[test]
fn fg_prints_the_golden_polynomial() {
    let out = discrim(&["fg", "--group", "A2"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        "12*x1^2*x2 + 12*x1*x2^2 + 6*x1^2 + 24*x1*x2 + 6*x2^2 + 12*x1 + 12*x2 + 6"
    );
}

#[test]
fn fg_rejects_reductive_groups_with_a_hint() {
    let out = discrim(&["fg", "--group", "GL3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("A-type part"));
}

#[test]
fn usage_errors_exit_one() {
    let bad_group = discrim(&["degree", "--group", "Q9", "--weight", "L:1"]);
    assert_eq!(bad_group.status.code(), Some(1));
    assert!(stderr(&bad_group).contains("token 1"));

    let bad_weight = discrim(&["degree", "--group", "A2", "--weight", "1,1"]);
    assert_eq!(bad_weight.status.code(), Some(1));

    let missing_flag = discrim(&["degree", "--group", "A2"]);
    assert_eq!(missing_flag.status.code(), Some(1));

    let unknown_command = discrim(&["frobnicate"]);
    assert_eq!(unknown_command.status.code(), Some(1));

    let help = discrim(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
}

#[test]
fn class_reports_gl_factor_coefficients() {
    let out = discrim(&[
        "class",
        "--group",
        "GL2+GL2",
        "--weight",
        "L:0,1,0,1",
        "--output",
        "json",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["degree"], 2);
    assert_eq!(v["u_coefficient"], "-2");
    let sigma = v["sigma1"].as_array().unwrap();
    assert_eq!(sigma.len(), 2);
    assert_eq!(sigma[0]["coefficient"], "-1");
    assert_eq!(sigma[1]["coefficient"], "-1");
}

#[test]
fn closed_form_subcommands() {
    let boole = discrim(&["boole", "3", "3", "--output", "json"]);
    assert!(boole.status.success());
    assert_eq!(json(&boole)["degree"], 12);

    let gr = discrim(&["grassmannian", "8", "3", "--output", "json"]);
    assert_eq!(json(&gr)["degree"], 16);

    let gr3 = discrim(&["gr3", "9", "--output", "json"]);
    assert_eq!(json(&gr3)["degree"], 120);

    let hyperdet = discrim(&["hyperdet", "2x2x4", "--output", "json"]);
    let v = json(&hyperdet);
    assert_eq!(v["degree"], 0);
    assert_eq!(v["hypersurface"], false);

    let two_row = discrim(&["family", "--two-row", "3,2,1", "--output", "json"]);
    assert_eq!(json(&two_row)["degree"], 6);

    let aabb = discrim(&["family", "--aabb", "4,1", "--output", "json"]);
    assert_eq!(json(&aabb)["degree"], 2);

    let conflicting = discrim(&["family", "--ab", "3,1,1", "--aabb", "4,1"]);
    assert_eq!(conflicting.status.code(), Some(1));

    let none_given = discrim(&["family"]);
    assert_eq!(none_given.status.code(), Some(1));
}

#[test]
fn verify_suites_pass() {
    let paper = discrim(&["verify", "--suite", "paper"]);
    assert_eq!(paper.status.code(), Some(0), "stdout: {}", stdout(&paper));
    assert!(stdout(&paper).contains("ok   gr38"));
    assert!(stdout(&paper).contains("0 failures"));

    let oracle = discrim(&["verify", "--suite", "oracle", "--seed", "7"]);
    assert_eq!(oracle.status.code(), Some(0), "stdout: {}", stdout(&oracle));
    assert!(stdout(&oracle).contains("cross-methods"));
}
