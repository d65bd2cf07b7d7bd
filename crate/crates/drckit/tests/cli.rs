//! End-to-end tests of the `drckit` binary: exit codes, output shapes, and
//! byte-for-byte determinism.

use std::path::Path;
use std::process::{Command, Output};

fn drckit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_drckit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn drckit_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_drckit"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write_file(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_owned()
}

const ONE_ELEMENT_ALGEBRA: &str = "drckit algebra v1\n1\n0\n0\n";
const TWO_CHAIN_ALGEBRA: &str = "drckit algebra v1\n2\n0 0\n0 1\n0 0\n0 1\n";
const BROKEN_ALGEBRA: &str = "drckit algebra v1\n2\n0 1\n0 0\n0 0\n0 0\n";
const TWO_CHAIN_SEMIGROUP: &str = "drckit semigroup v1\n2\n0 0\n0 1\n0 1\n0 1\n";

#[test]
fn check_reports_all_pass_on_the_trivial_algebra() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_file(dir.path(), "one.alg", ONE_ELEMENT_ALGEBRA);
    let out = drckit(&["check", &path]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 14);
    assert!(text
        .lines()
        .all(|l| l.starts_with("AXIOM") && l.ends_with("PASS")));
}

#[test]
fn check_reports_least_witness_on_a_broken_table() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_file(dir.path(), "bad.alg", BROKEN_ALGEBRA);
    let out = drckit(&["check", &path]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("AXIOM L2 FAIL 0 1"), "{text}");
}

#[test]
fn classify_prints_flags() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_file(dir.path(), "chain.alg", TWO_CHAIN_ALGEBRA);
    let out = drckit(&["classify", &path]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("strong true"));
    assert!(text.contains("commutative true"));
}

#[test]
fn word_eq_verdicts_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_file(dir.path(), "chain.alg", TWO_CHAIN_ALGEBRA);
    let yes = drckit(&["word-eq", &path, "1 1", "1"]);
    assert_eq!(stdout(&yes), "YES\n");
    assert_eq!(yes.status.code(), Some(0));
    let no = drckit(&["word-eq", &path, "0", "1"]);
    assert_eq!(stdout(&no), "NO\n");
    assert_eq!(no.status.code(), Some(1));
    let tight = drckit(&["word-eq", &path, "1 1 1", "1", "--budget", "2"]);
    assert_eq!(stdout(&tight), "UNKNOWN\n");
    assert_eq!(tight.status.code(), Some(0));
    // the environment variable sets the same limit
    let via_env = drckit_with_env(&["word-eq", &path, "1 1 1", "1"], "DRCKIT_BUDGET", "2");
    assert_eq!(stdout(&via_env), "UNKNOWN\n");
}

#[test]
fn normalize_prints_a_path_word() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_file(dir.path(), "chain.alg", TWO_CHAIN_ALGEBRA);
    let out = drckit(&["normalize", &path, "1 0 1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0 0 0\n");
}

#[test]
fn build_fundamental_emits_a_semigroup_document() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_file(dir.path(), "chain.alg", TWO_CHAIN_ALGEBRA);
    let out = drckit(&["build-fundamental", &path]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), TWO_CHAIN_SEMIGROUP);
}

#[test]
fn build_munn_writes_a_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_file(dir.path(), "chain.alg", TWO_CHAIN_ALGEBRA);
    let sidecar = dir.path().join("munn.map");
    let out = drckit(&["build-munn", &path, "--sidecar", sidecar.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), TWO_CHAIN_SEMIGROUP);
    let map = std::fs::read_to_string(&sidecar).unwrap();
    assert_eq!(map, "ELEM 0 0 0 0:0\nELEM 1 1 1 0:0 1:1\n");
}

#[test]
fn round_trip_on_a_semigroup_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_file(dir.path(), "chain.sg", TWO_CHAIN_SEMIGROUP);
    let out = drckit(&["round-trip", &path]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "OK\n");
}

#[test]
fn enumerate_is_deterministic() {
    let first = drckit(&["enumerate", "algebra", "2"]);
    let second = drckit(&["enumerate", "algebra", "2"]);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.status.code(), Some(0));
    let docs = stdout(&first);
    assert_eq!(docs.matches("drckit algebra v1").count(), 3);
    let deduped = drckit(&["enumerate", "algebra", "2", "--dedup"]);
    assert_eq!(stdout(&deduped).matches("drckit algebra v1").count(), 2);
}

#[test]
fn enumerate_semigroups_of_order_two() {
    let out = drckit(&["enumerate", "semigroup", "2"]);
    assert_eq!(stdout(&out).matches("drckit semigroup v1").count(), 6);
}

#[test]
fn category_documents_check_classify_and_round_trip() {
    let s = drckit::semigroup::BiUnarySemigroup::cyclic_group(2);
    let c = drckit::category::from_semigroup(&s).unwrap();
    let text = drckit::docs::serialize(&drckit::docs::Document::Category(c));
    let dir = tempfile::tempdir().unwrap();
    let path = write_file(dir.path(), "group.cat", &text);
    let check = drckit(&["check", &path]);
    assert_eq!(check.status.code(), Some(0));
    assert!(stdout(&check).lines().all(|l| l.ends_with("PASS")));
    let classify = drckit(&["classify", &path]);
    assert!(stdout(&classify).contains("groupoid true"));
    let round = drckit(&["round-trip", &path]);
    assert_eq!(stdout(&round), "OK\n");
}

#[test]
fn usage_errors_exit_two() {
    let unknown = drckit(&["frobnicate"]);
    assert_eq!(unknown.status.code(), Some(2));
    let missing = drckit(&["check", "/nonexistent/path.alg"]);
    assert_eq!(missing.status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let path = write_file(dir.path(), "trunc.alg", "drckit algebra v1\n2\n0 0\n");
    let truncated = drckit(&["check", &path]);
    assert_eq!(truncated.status.code(), Some(2));
    let err = String::from_utf8_lossy(&truncated.stderr).into_owned();
    assert!(err.contains("line"), "{err}");
}

#[test]
fn guard_violation_reports_resource_limit() {
    let out = drckit(&["enumerate", "algebra", "9"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("resource limit"), "{err}");
}
