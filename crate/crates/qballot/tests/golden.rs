//! Byte-for-byte output of the binary against files in `tests/golden/`.
//! Run with `UPDATE_GOLDEN=1` to rewrite them after an intended change.

use std::path::PathBuf;
use std::process::Command;

fn golden(name: &str, args: &[&str]) {
    let out = Command::new(env!("CARGO_BIN_EXE_qballot")).args(args).output().expect("run qballot");
    assert!(out.status.success(), "qballot {args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let actual = String::from_utf8(out.stdout).unwrap();
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "\n--- golden mismatch: {name} ---\n{actual}");
}

#[test]
fn table1_text() {
    golden("table1_6.txt", &["table", "1", "--max-n", "6"]);
}

#[test]
fn table2_text_and_csv() {
    golden("table2_4.txt", &["table", "2", "--max-n", "4"]);
    golden("table2_4.csv", &["table", "2", "--max-n", "4", "--format", "csv"]);
}

#[test]
fn small_family_displays() {
    golden("cx_2.txt", &["cx", "--n", "2"]);
    golden("cx_3.txt", &["cx", "--n", "3"]);
    golden("cx_4.txt", &["cx", "--n", "4"]);
    golden("cx_3_monomial.txt", &["cx", "--n", "3", "--basis", "monomial"]);
    golden("cx_4.json", &["cx", "--n", "4", "--format", "json"]);
}

#[test]
fn polytope_artifacts() {
    golden("polytope_3.json", &["polytope", "--n", "3", "--format", "json"]);
    golden("polytope_2.svg", &["polytope", "--n", "2", "--format", "svg"]);
    golden("polytope_6.txt", &["polytope", "--n", "6"]);
}

#[test]
fn andrews_report() {
    golden("andrews_5.json", &["verify", "andrews", "--max-n", "5", "--format", "json"]);
}
