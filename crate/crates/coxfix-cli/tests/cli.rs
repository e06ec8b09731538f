//! End-to-end checks of the `coxfix` binary: exit codes, report
//! determinism and the documented file formats.

use std::path::Path;
use std::process::{Command, Output};

fn coxfix(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxfix"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn catalog_lists_types_and_suites() {
    let out = coxfix(&["catalog"]);
    assert_eq!(exit_code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("B<n>"));
    assert!(text.contains("affA<n>"));
    assert!(text.contains("bw-spheres"));
    assert!(text.contains("deodhar-oracle"));
}

#[test]
fn passing_suite_exits_zero() {
    let out = coxfix(&["verify", "bw-spheres", "--group", "A2"]);
    assert_eq!(exit_code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS bw-spheres A2"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn unknown_suite_and_group_exit_two() {
    let out = coxfix(&["verify", "no-such-suite", "--group", "A2"]);
    assert_eq!(exit_code(&out), 2);
    let out = coxfix(&["verify", "bw-spheres", "--group", "Z99"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn malformed_matrix_file_exits_two_with_line_number() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.cox");
    std::fs::write(&path, "rank 2\n1 3\n3 2\n").unwrap();
    let out = coxfix(&["verify", "bw-spheres", "--group", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("parse error"), "{err}");
}

#[test]
fn matrix_file_group_works() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a2.cox");
    std::fs::write(&path, "rank 2\n1 3\n3 1\n").unwrap();
    let out = coxfix(&[
        "verify",
        "deodhar-oracle",
        "--group",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let (p1, p2) = (dir.path().join("r1.tsv"), dir.path().join("r2.tsv"));
    for p in [&p1, &p2] {
        let out = coxfix(&[
            "verify",
            "bw-spheres",
            "--group",
            "A3",
            "--samples",
            "25",
            "--seed",
            "7",
            "-o",
            p.to_str().unwrap(),
        ]);
        assert_eq!(exit_code(&out), 0);
    }
    let (r1, r2) = (std::fs::read(&p1).unwrap(), std::fs::read(&p2).unwrap());
    assert!(!r1.is_empty());
    assert_eq!(r1, r2);
}

#[test]
fn tsv_has_the_documented_columns() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.tsv");
    let out = coxfix(&[
        "verify",
        "twisted-lemmas",
        "--group",
        "A3",
        "--theta",
        "perm",
        "--perm",
        "3,2,1",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "suite\tgroup\tparams\tcheck-id\tstatus\twitness"
    );
    let first = lines.next().unwrap();
    let cols: Vec<&str> = first.split('\t').collect();
    assert_eq!(cols.len(), 6);
    assert_eq!(cols[0], "twisted-lemmas");
    assert_eq!(cols[4], "PASS");
}

#[test]
fn fold_suite_with_perm_passes() {
    let out = coxfix(&["verify", "fold-bruhat", "--group", "A3", "--perm=3,2,1"]);
    assert_eq!(exit_code(&out), 0);
    let out = coxfix(&[
        "verify",
        "fold-matrices",
        "--group",
        "A3",
        "--perm=3,2,1",
        "--expect",
        "B2",
    ]);
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn e6_fold_requires_extended() {
    let out = coxfix(&[
        "verify",
        "fold-matrices",
        "--group",
        "E6",
        "--perm=5,4,3,2,1,6",
        "--expect",
        "F4",
    ]);
    assert_eq!(exit_code(&out), 2);
    let out = coxfix(&[
        "verify",
        "fold-matrices",
        "--group",
        "E6",
        "--perm=5,4,3,2,1,6",
        "--expect",
        "F4",
        "--extended",
    ]);
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn failing_expectation_exits_one() {
    let out = coxfix(&[
        "verify",
        "fold-matrices",
        "--group",
        "A3",
        "--perm=3,2,1",
        "--expect",
        "A2",
    ]);
    assert_eq!(exit_code(&out), 1);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL"));
}

#[test]
fn affine_smoke_via_cli() {
    let out = coxfix(&[
        "verify",
        "twisted-gorenstein",
        "--group",
        "affA2",
        "-L",
        "6",
        "--max-top",
        "4",
    ]);
    assert_eq!(
        exit_code(&out),
        0,
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn rank_formula_dihedral_example() {
    let out = coxfix(&[
        "verify",
        "rank-formula",
        "--group",
        "I2(9)",
        "--theta",
        "id",
    ]);
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn missing_matrix_rows_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("short.cox");
    std::fs::write(&path, "rank 3\n1 3 2\n3 1 3\n").unwrap();
    let out = coxfix(&["verify", "bw-spheres", "--group", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn sample_flag_reaches_sampling_suites() {
    let out = coxfix(&[
        "verify",
        "deodhar-oracle",
        "--group",
        "A3",
        "--samples",
        "50",
        "--seed",
        "11",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("pairs=50"), "{text}");
    assert!(Path::new(env!("CARGO_BIN_EXE_coxfix")).exists());
}
