//! End-to-end checks of the command-line interface: subcommands, formats,
//! exit codes, cache behavior, and byte-determinism across thread counts.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hong-loewy"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn table1_matches_reference_rows() {
    let out = run(&["table1", "--from", "2", "--to", "10"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 10); // header + 9 rows
    assert!(lines[0].starts_with("n,c_n,lb_thm41,lb_frob,ub_thm31,lb_loewy,ub_loewy,"));
    assert!(lines[1].starts_with("2,0.3819660113,0.3819660113,0.3779644730,0.4082482905,"));
    assert!(lines[9].starts_with("10,0.0003300037,0.0003300037,0.0003300036,0.0003300038,"));
}

#[test]
fn table1_bytes_identical_across_threads() {
    let a = run(&["--threads", "1", "table1", "--from", "2", "--to", "6"]);
    let b = run(&["--threads", "2", "table1", "--from", "2", "--to", "6"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(
        a.stdout, b.stdout,
        "document must not depend on thread count"
    );
}

#[test]
fn cn_json_output() {
    let out = run(&["--format", "json", "cn", "--n", "5"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).expect("valid json");
    assert_eq!(v["n"], 5);
    assert_eq!(v["decimal"], "0.0370683347");
    assert!(v["cn_lo"].as_str().unwrap().contains('/'));
}

#[test]
fn charpoly_csv_lists_coefficients() {
    let out = run(&["charpoly", "--n", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("degree,coefficient"));
    assert!(text.contains("0,1"));
    assert!(text.contains("3,-13"));
    assert!(text.contains("4,1"));
}

#[test]
fn oracle_respects_caps() {
    // n = 7 without the opt-in flag: usage error, exit code 2
    let refused = run(&["oracle", "--n", "7"]);
    assert_eq!(refused.status.code(), Some(2));
    // n = 3 works
    let ok = run(&["oracle", "--n", "3", "--shards", "2"]);
    assert!(ok.status.success());
    let text = stdout(&ok);
    assert!(text.contains("0.1980622642"));
}

#[test]
fn lattice_check_passes() {
    let out = run(&["lattice", "--n", "4"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("true"));
}

#[test]
fn figures_emit_slopes() {
    let out = run(&["figures", "--from", "3", "--to", "8"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("# fitted log-slopes"));
    // the n = 3 row carries the reference errors
    assert!(text.contains("6.06188e-3"));
    assert!(text.contains("2.40302e-4"));
}

#[test]
fn verify_exits_zero_on_success() {
    let out = run(&["verify", "--from", "2", "--to", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("all passed"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn unknown_arguments_exit_two() {
    let out = run(&["definitely-not-a-subcommand"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cache_file_round_trips() {
    let dir = std::env::temp_dir().join(format!("hl-cli-cache-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cache: PathBuf = dir.join("cache.json");
    let cache_arg = cache.to_str().unwrap();

    let first = run(&["--cache-path", cache_arg, "cn", "--n", "6"]);
    assert!(first.status.success());
    assert!(cache.exists(), "cache file must be written");
    let contents = std::fs::read_to_string(&cache).unwrap();
    assert!(contents.contains("\"6\""));

    // a second run must reproduce the same output from the cache
    let second = run(&["--cache-path", cache_arg, "cn", "--n", "6"]);
    assert!(second.status.success());
    assert_eq!(first.stdout, second.stdout);

    let _ = std::fs::remove_file(&cache);
    let _ = std::fs::remove_dir(&dir);
}
