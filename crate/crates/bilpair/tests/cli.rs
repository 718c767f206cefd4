//! End-to-end tests of the command-line binary: output shape, exit codes
//! and byte-for-byte determinism.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_bilpair")
}

fn run(args: &[&str], dir: &Path) -> Output {
    Command::new(bin())
        .args(args)
        .current_dir(dir)
        .env_remove("BILPAIR_THREADS")
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) {
    std::fs::write(dir.join(name), text).unwrap();
}

const A3: &str = "field p=7\ndim 2\ne1*e1 = 1*e2\n";
const N2: &str = "field p=7\ndim 2\ne1*e1 = 1*e1\ne1*e2 = 1*e2\ne2*e1 = 1*e2\n";

#[test]
fn radical_reports_dim_and_basis() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "a3.bp", A3);
    let out = run(&["radical", "a3.bp"], dir.path());
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("dim 1"));
    assert!(text.contains("0 1"));
}

#[test]
fn h2_reports_dimensions() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "a3.bp", A3);
    let out = run(&["h2", "a3.bp"], dir.path());
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("coboundary dim 1"));
    assert!(text.contains("h2_dim 3"));
}

#[test]
fn equiv_prints_witness_or_inequivalent() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "a3.bp", A3);
    write(dir.path(), "n2.bp", N2);
    // A pair is equivalent to itself.
    let same = run(&["equiv", "a3.bp", "a3.bp"], dir.path());
    assert!(same.status.success());
    assert!(String::from_utf8(same.stdout).unwrap().contains("witness"));
    // Radical dimensions differ, so these cannot be equivalent.
    let diff = run(&["equiv", "a3.bp", "n2.bp"], dir.path());
    assert!(diff.status.success());
    assert_eq!(String::from_utf8(diff.stdout).unwrap().trim(), "inequivalent");
}

#[test]
fn equiv_budget_exit_code_and_force() {
    let dir = tempfile::tempdir().unwrap();
    // Dimension 6 over F_2 exceeds the standard search budget.
    let mut big = String::from("field p=2\ndim 6\n");
    big.push_str("e1*e1 = 1*e3\ne1*e2 = 1*e4\ne2*e1 = 1*e5\ne2*e2 = 1*e6\n");
    write(dir.path(), "big.bp", &big);
    let refused = run(&["equiv", "big.bp", "big.bp"], dir.path());
    assert_eq!(refused.status.code(), Some(3));
    let forced = run(&["equiv", "big.bp", "big.bp", "--force"], dir.path());
    assert!(forced.status.success());
    assert!(String::from_utf8(forced.stdout).unwrap().contains("witness"));
}

#[test]
fn aut_reports_group_order() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "a3.bp", A3);
    let out = run(&["aut", "a3.bp"], dir.path());
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("order 42"));
    assert!(text.contains("element 41:"));
}

#[test]
fn extend_roundtrips_through_radical() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "a3.bp", A3);
    let out = run(&["extend", "a3.bp", "--theta", "0,0,0,1"], dir.path());
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("dim 3"));
    assert!(text.contains("e2*e2 = 1*e3"));
    // The emitted pair parses back through the radical subcommand.
    write(dir.path(), "ext.bp", &text);
    let rad = run(&["radical", "ext.bp"], dir.path());
    assert!(rad.status.success());
    assert!(String::from_utf8(rad.stdout).unwrap().contains("dim 1"));
}

#[test]
fn extend_rejects_malformed_theta() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "a3.bp", A3);
    let short = run(&["extend", "a3.bp", "--theta", "0,0,0"], dir.path());
    assert_eq!(short.status.code(), Some(2));
    let junk = run(&["extend", "a3.bp", "--theta", "0,0,0,x"], dir.path());
    assert_eq!(junk.status.code(), Some(2));
}

#[test]
fn classify_writes_tsv_and_representatives() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "a3.bp", A3);
    let out = run(&["classify", "a3.bp", "--s", "1", "--out", "orbits"], dir.path());
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "base\ts\torbit_index\torbit_size\trepresentative_subspace_rref"
    );
    let body: Vec<&str> = lines.collect();
    // T₁ of this base over F_7 splits into 3 + 7 orbits.
    assert_eq!(body.len(), 10);
    assert!(body.iter().all(|l| l.starts_with("a3\t1\t")));
    let written = std::fs::read_to_string(dir.path().join("orbits/orbits.tsv")).unwrap();
    assert_eq!(written, text);
    for i in 0..10 {
        let rep = dir.path().join(format!("orbits/orbit_{i}.bp"));
        let rep = std::fs::read_to_string(rep).unwrap();
        assert!(rep.contains("dim 3"));
    }
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(&["frobnicate"], dir.path()).status.code(), Some(2));
    assert_eq!(run(&["radical"], dir.path()).status.code(), Some(2));
    assert_eq!(run(&["radical", "missing.bp"], dir.path()).status.code(), Some(2));
    write(dir.path(), "a3.bp", A3);
    assert_eq!(
        run(&["verify-tables", "--table", "9"], dir.path()).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["classify", "a3.bp", "--s", "0"], dir.path()).status.code(),
        Some(2)
    );
}

#[test]
fn malformed_input_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "bad.bp", "dim 2\nfield p=7\n");
    assert_eq!(run(&["radical", "bad.bp"], dir.path()).status.code(), Some(1));
}

#[test]
fn verify_tables_four_succeeds_with_header() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        &["verify-tables", "--table", "4", "--field", "5", "--samples", "1"],
        dir.path(),
    );
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "section\tid\tfield\tdetail\tstatus");
    assert!(text.contains("entry\tA3\t"));
    assert!(text.contains("fixture\tN2\t"));
    assert!(text.contains("audit\ttable4\t"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_tables_budget_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    // The pairwise audit of the dimension-4 table over F_7 is out of the
    // standard budget.
    let out = run(
        &["verify-tables", "--table", "2", "--field", "7", "--samples", "1"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn outputs_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "a3.bp", A3);
    for args in [
        vec!["classify", "a3.bp", "--s", "2"],
        vec!["h2", "a3.bp"],
        vec!["verify-tables", "--table", "4", "--field", "3", "--samples", "2", "--seed", "5"],
    ] {
        let first = run(&args, dir.path());
        let second = run(&args, dir.path());
        assert!(first.status.success());
        assert_eq!(first.stdout, second.stdout, "args: {args:?}");
    }
}

#[test]
fn thread_override_is_honored_and_validated() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "a3.bp", A3);
    let ok = Command::new(bin())
        .args(["radical", "a3.bp"])
        .current_dir(dir.path())
        .env("BILPAIR_THREADS", "2")
        .output()
        .unwrap();
    assert!(ok.status.success());
    let bad = Command::new(bin())
        .args(["radical", "a3.bp"])
        .current_dir(dir.path())
        .env("BILPAIR_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
