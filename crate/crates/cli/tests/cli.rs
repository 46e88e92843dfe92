//! End-to-end checks of the binary: exit codes, output determinism, and the
//! documented behavior of each subcommand.

use std::process::{Command, Output};

fn bigen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bigen"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn analyze_s3_reports_36_edges() {
    let out = bigen(&["analyze", "--group", "S:3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["schema"], 1);
    assert_eq!(report["edges"], 36);
    assert_eq!(report["stars"].as_array().unwrap().len(), 6);
}

#[test]
fn analyze_trivial_group() {
    let out = bigen(&["analyze", "--group", "Z:1"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["stars"], serde_json::json!([1]));
    assert_eq!(report["parameters"]["diameter"], 1);
}

#[test]
fn analyze_d12_with_gen_graph() {
    let out = bigen(&["analyze", "--group", "D:12", "--with-gen-graph"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["subgroups"].as_array().unwrap().len(), 16);
    assert_eq!(report["gen_graph"].as_array().unwrap().len(), 16);
    assert_eq!(report["parameters"]["diameter"], "inf");
}

#[test]
fn analyze_is_deterministic_across_thread_counts() {
    // Q:36 is large enough that the partitioned pair scan actually runs.
    let one = bigen(&["analyze", "--group", "Q:36", "--threads", "1"]);
    let four = bigen(&["analyze", "--group", "Q:36", "--threads", "4"]);
    let again = bigen(&["analyze", "--group", "Q:36", "--threads", "4"]);
    assert_eq!(stdout(&one), stdout(&four));
    assert_eq!(stdout(&four), stdout(&again));
    assert!(!stdout(&one).is_empty());
}

#[test]
fn parse_errors_exit_2() {
    for args in [
        &["analyze", "--group", "W:3"][..],
        &["analyze", "--group", "D:7"],
        &["verify", "--family", "nope", "--primes", "2..3"],
        &["verify", "--family", "D2p", "--primes", "seven"],
        &["verify", "--family", "Z2p", "--primes", "2..2"],
    ] {
        let out = bigen(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", stderr(&out));
    }
}

#[test]
fn cap_exceeded_exits_3_and_cap_is_adjustable() {
    let out = bigen(&["analyze", "--group", "D:18", "--cap", "16"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("cap"));
    let out = bigen(&["analyze", "--group", "D:18", "--cap", "18"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_family_runs_pass() {
    let out = bigen(&["verify", "--family", "D2p", "--primes", "2..7"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4); // p = 2, 3, 5, 7
    for line in lines {
        let cert: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(cert["verdict"], "pass");
        assert_eq!(cert["schema"], 1);
    }
}

#[test]
fn verify_zp_over_wide_range() {
    let out = bigen(&["verify", "--family", "Zp", "--primes", "2..13"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 6); // 2, 3, 5, 7, 11, 13
}

#[test]
fn verify_q4p2_both_branches() {
    let out = bigen(&["verify", "--family", "Q4p2", "--primes", "2..3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out).lines().count(), 2);
}

#[test]
fn table1_reports_the_reference_discrepancy() {
    let out = bigen(&["table1"]);
    // The embedded reference phi2 cell for D:12 contradicts the degree-sum
    // identity, so the comparison flags exactly that cell and exits 4.
    assert_eq!(out.status.code(), Some(4));
    let csv = stdout(&out);
    assert!(csv.starts_with("group,|G|,LC,LA,LN,LS,edges,pr_cyc,pr,pr_nil,pr_sol,phi2\n"));
    assert_eq!(csv.lines().count(), 8);
    assert!(csv.contains("S:4,24,17,21,24,30,576,1/6,5/24,1/3,1/1,3/8"));
    assert!(csv.contains("D:12,12,10,13,13,16,144,3/8,1/2,1/2,1/1,1/4"));
    let err = stderr(&out);
    assert_eq!(err.lines().count(), 1);
    assert!(err.contains("D:12 phi2: reference 3/8 vs computed 1/4"));
}

#[test]
fn dot_full_trivial_group() {
    let out = bigen(&["dot", "--group", "Z:1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("graph bigraph {"));
    assert_eq!(text.matches(" -- ").count(), 1);
}

#[test]
fn dot_collapsed_s3() {
    let out = bigen(&["dot", "--group", "S:3", "--mode", "collapsed"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.matches("shape=box").count(), 6);
    assert!(text.contains("|18\""));
}

#[test]
fn dot_full_refuses_large_groups() {
    let out = bigen(&["dot", "--group", "D:102", "--mode", "full"]);
    assert_eq!(out.status.code(), Some(5));
    let out = bigen(&["dot", "--group", "D:102", "--mode", "collapsed"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("bigen-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s3.json");
    let out = bigen(&["analyze", "--group", "S:3", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    let direct = bigen(&["analyze", "--group", "S:3"]);
    assert_eq!(written, stdout(&direct));
}
