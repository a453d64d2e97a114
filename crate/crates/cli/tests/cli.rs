use std::process::{Command, Output};

use serde_json::Value;

fn sgp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sgp")).args(args).env_remove("SGP_BUDGET").output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn info_reports_genus_and_conductor() {
    let out = sgp(&["info", "--gens", "7,11"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["descriptor"]["genus"], 30);
    assert_eq!(v["descriptor"]["conductor"], 60);
    assert_eq!(v["symmetric"], true);
}

#[test]
fn feng_rao_number_of_non_dim2_semigroup() {
    let out = sgp(&["frnumber", "--gens", "6,13,14,15,16,17", "-r", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["value"], 3);
}

#[test]
fn hermitian_markdown_table() {
    let out = sgp(&[
        "ghw-table",
        "--gens",
        "4,5",
        "-r",
        "2",
        "-q",
        "16",
        "--n",
        "64",
        "--m-range",
        "12:28",
        "--format",
        "md",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let gfr: Vec<String> = (6..=22).map(|v: i64| v.to_string()).collect();
    assert!(text.contains(&format!("| GFR | {} |", gfr.join(" | "))));
    assert!(text.contains("| GOB | 5 | 5 | 5 | 6 | 9 | 9 | 9 | 10 | 11 | 13 | 13 | 14 | 15 | 16 | 17 | 19 | 20 |"));
    assert!(text.contains("| k_m | 57 |"));
}

#[test]
fn csv_and_json_tables_agree() {
    let base = ["ghw-table", "--gens", "7,11", "-r", "2", "-q", "2", "--m-range", "59:70"];
    let csv = stdout(&sgp(&[&base[..], &["--format", "csv"]].concat()));
    let v = json(&sgp(&[&base[..], &["--format", "json"]].concat()));
    let rows = v["rows"].as_array().unwrap();
    let csv_rows: Vec<&str> = csv.lines().skip(1).filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows.len(), csv_rows.len());
    for (row, line) in rows.iter().zip(csv_rows) {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields[0], row["m"].to_string());
        assert_eq!(fields[2], row["gfr"].to_string());
        assert_eq!(fields[3], row["gob"].to_string());
    }
    assert_eq!(v["params"]["gens"], serde_json::json!([7, 11]));
    // 59 is the Frobenius number.
    assert!(csv.contains("# skipped gaps: 59"));
}

#[test]
fn label_offset_is_reported() {
    let out = sgp(&[
        "ghw-table",
        "--gens",
        "7,11",
        "-r",
        "10",
        "-q",
        "2",
        "--m-range",
        "60:62",
        "--format",
        "md",
        "--label-offset",
        "30",
    ]);
    let text = stdout(&out);
    assert!(text.starts_with("| m | 30 | 31 | 32 |"));
    assert!(text.contains("shifted by -30"));
}

#[test]
fn generalized_distance_with_witness() {
    let v = json(&sgp(&["frgen", "--gens", "2,5", "--m", "4", "-r", "3"]));
    assert_eq!(v["value"], 5);
    assert_eq!(v["witness"], serde_json::json!([4, 5, 6]));
    let threaded = json(&sgp(&["--threads", "4", "frgen", "--gens", "2,5", "--m", "4", "-r", "3"]));
    assert_eq!(v, threaded);
}

#[test]
fn sets() {
    let v = json(&sgp(&["divisors", "--gens", "2,5", "--of", "4,5,7"]));
    assert_eq!(v["elements"], serde_json::json!([0, 2, 4, 5, 7]));
    let v = json(&sgp(&["apery", "--gens", "3,5", "--n", "4"]));
    assert_eq!(v["elements"], serde_json::json!([0, 3, 5, 6, 8, 11]));
    let v = json(&sgp(&["apery", "--gens", "3,5", "--n", "-16"]));
    assert_eq!(v["count"], 0);
    let v = json(&sgp(&["new-divisors", "--gens", "3,5", "--mbar", "15", "--n", "4"]));
    assert_eq!(v["elements"], serde_json::json!([8, 11, 13, 14, 16, 19]));
    let v = json(&sgp(&["new-divisors", "--gens", "6,13,14,15,16,17", "--mbar", "25", "--n", "6"]));
    assert_eq!(v["method"], "apery");
    assert_eq!(v["count"], 6);
    let v = json(&sgp(&["fr", "--gens", "3,5", "--m", "8"]));
    // D(10) = {0, 5, 10}.
    assert_eq!(v["value"], 3);
}

#[test]
fn draw_text_and_svg() {
    let base = ["draw", "--gens", "3,5", "--origin", "15", "--rows", "-3:1", "--layer", "ground"];
    let text = stdout(&sgp(&base));
    assert!(text.contains("15*") && text.contains("17*"));
    let svg = stdout(&sgp(&[&base[..], &["--format", "svg"]].concat()));
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<rect").count(), 25);
}

#[test]
fn oracle_subcommand_matches() {
    let a = json(&sgp(&["oracle", "apery", "--gens", "3,5", "--n", "4"]));
    let b = json(&sgp(&["apery", "--gens", "3,5", "--n", "4"]));
    assert_eq!(a, b);
    let v = json(&sgp(&["oracle", "frgen", "--gens", "2,5", "--m", "4", "-r", "3", "--window", "20"]));
    assert_eq!(v["value"], 5);
    let small = sgp(&["oracle", "frgen", "--gens", "3,5", "--m", "15", "-r", "2", "--window", "16"]);
    assert_eq!(small.status.code(), Some(3));
    assert_eq!(json(&small)["uncertified"], true);
}

#[test]
fn deterministic_output() {
    let args = ["frgen", "--gens", "3,7", "--m", "12", "-r", "4"];
    assert_eq!(sgp(&args).stdout, sgp(&args).stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(sgp(&["info", "--gens", "4,6"]).status.code(), Some(2));
    assert_eq!(sgp(&["fr", "--gens", "3,5", "--m", "7"]).status.code(), Some(2));
    assert_eq!(sgp(&["ghw-table", "--gens", "3,5", "-r", "2", "-q", "2", "--m-range", "2:10"]).status.code(), Some(2));
    assert_eq!(sgp(&["info"]).status.code(), Some(1));
    assert_eq!(sgp(&["frnumber", "--gens", "3,5", "-r", "0"]).status.code(), Some(1));
    assert_eq!(sgp(&["nonsense"]).status.code(), Some(1));
    assert_eq!(sgp(&["--help"]).status.code(), Some(0));
    assert_eq!(sgp(&["draw", "--gens", "4,6", "--origin", "0", "--rows", "0:1"]).status.code(), Some(2));
}

#[test]
fn budget_exceeded() {
    let out = Command::new(env!("CARGO_BIN_EXE_sgp"))
        .args(["frgen", "--gens", "7,11", "--m", "80", "-r", "5"])
        .env("SGP_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let v = json(&out);
    assert_eq!(v["uncertified"], true);
    assert!(v["best_bound"].as_u64().unwrap() > 0);

    let bad = Command::new(env!("CARGO_BIN_EXE_sgp"))
        .args(["info", "--gens", "3,5"])
        .env("SGP_BUDGET", "lots")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}
