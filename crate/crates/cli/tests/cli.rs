use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn chardeg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chardeg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures")
}

fn write(dir: &Path, file: &str, text: &str) -> PathBuf {
    let path = dir.join(file);
    fs::write(&path, text).unwrap();
    path
}

const A5: &str = "name A5\ndegree 5\norder 60\nsolvable false\ngen (1 2 3 4 5)\ngen (1 2 3)\n";
const S6: &str = "name S6\ndegree 6\norder 720\ngen (1 2 3 4 5 6)\ngen (1 2)\n";

#[test]
fn mult_json_has_fixed_keys() {
    let dir = tempfile::tempdir().unwrap();
    let a5 = write(dir.path(), "a5.grp", A5);
    let out = chardeg(&["mult", "--json", a5.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out).trim(),
        r#"{"name":"A5","order":60,"classes":5,"pattern":"1 3^2 4 5","m":2,"maxFieldDegree":2,"verdict":"consistent"}"#
    );
}

#[test]
fn excluded_group_is_consistent_and_mislabelled_group_is_not() {
    let dir = tempfile::tempdir().unwrap();
    let s6 = write(dir.path(), "s6.grp", S6);
    let out = chardeg(&["mult", s6.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("degrees 1^2 5^4 9^2 10^2 16, m = 4"));

    // S6 presented under the name of a listed group with a different m
    let fake = write(dir.path(), "fake.grp", &S6.replace("name S6", "name S5").replace("order 720\n", ""));
    let out = chardeg(&["mult", "--json", fake.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains(r#""verdict":"inconsistent""#));
}

#[test]
fn malformed_input_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.grp", "name X\ndegree 3\ngen (1 2 4)\n");
    let out = chardeg(&["mult", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("bad.grp:3"), "{err}");

    let wrong = write(dir.path(), "wrong.grp", &A5.replace("order 60", "order 120"));
    let out = chardeg(&["table", wrong.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("order mismatch"));

    assert_eq!(chardeg(&["mult", "/definitely/not/here.grp"]).status.code(), Some(2));
    assert_eq!(chardeg(&["sym", "--max-n", "0"]).status.code(), Some(2));
}

#[test]
fn table_rows_and_columns() {
    let dir = tempfile::tempdir().unwrap();
    let a5 = write(dir.path(), "a5.grp", A5);
    let out = chardeg(&["table", a5.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    // header, class, size, five characters
    assert_eq!(lines.len(), 8);
    assert!(lines[1].split_whitespace().eq(["class", "1a", "2a", "3a", "5a", "5b"]));
    assert!(lines[2].split_whitespace().eq(["size", "1", "15", "20", "12", "12"]));
    assert!(lines[3].split_whitespace().skip(1).all(|v| v == "1"));
}

#[test]
fn lemmas_on_a_directory() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "a5.grp", A5);
    write(dir.path(), "s6.grp", S6);
    let out = chardeg(&["verify", "lemmas", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("A5") && text.contains("S6"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn bounds_first_method() {
    let out = chardeg(&["bounds", "first-method", "--group", "B", "--p", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("t = 4370 > 115"), "{text}");

    let out = chardeg(&["bounds", "first-method", "--order", "60", "--p", "2", "--t", "2"]);
    let text = stdout(&out);
    // 2σ(60) = 336, 2^8 = 256
    assert!(text.contains("2σ(|G/V|) = 336") && text.contains("t = 2 ≤ 8"), "{text}");

    let out = chardeg(&["bounds", "first-method", "--order", "60", "--p", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bounds_tables() {
    let text = stdout(&chardeg(&["bounds", "solvable-orders"]));
    assert!(text.contains("120 168 312 600 1176"));
    assert!(text.contains(": 6 10"));

    let text = stdout(&chardeg(&["bounds", "kp", "--family", "sym", "--n", "6", "--p", "2", "--module", "l"]));
    assert!(text.trim_end().ends_with("= 1"), "{text}");
    let out = chardeg(&["bounds", "kp", "--family", "alt", "--n", "5", "--p", "5", "--module", "i"]);
    assert_eq!(out.status.code(), Some(2));

    let text = stdout(&chardeg(&["bounds", "second-method", "--quotient", "6", "--indices", "2,3"]));
    assert!(text.starts_with("values: "));

    let out = chardeg(&["bounds", "binomial", "--max-n", "30"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn sym_small_range() {
    let out = chardeg(&["sym", "--max-n", "14"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let row = |n: &str| text.lines().find(|l| l.split_whitespace().next() == Some(n)).unwrap().to_string();
    assert!(row("6").split_whitespace().eq(["6", "4", "2", "none"]));
    assert!(row("13").split_whitespace().eq(["13", "6", "3", "429"]));
}

#[test]
fn scan_order_48_has_no_m2() {
    let dir = fixtures().join("scan/order48");
    let out = chardeg(&["scan", "--dir", dir.to_str().unwrap(), "--expect-none-m2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("scanned 52 of 52 groups; m = 2: none"));
}

#[test]
fn scan_flags_m2_groups() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "a5.grp", A5);
    write(dir.path(), "s6.grp", S6);
    let out = chardeg(&["scan", "--dir", dir.path().to_str().unwrap(), "--expect-none-m2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("m = 2: A5"));

    let out = chardeg(&["scan", "--dir", dir.path().to_str().unwrap(), "--expect-none-m2", "--solvable-only"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("scanned 0 of 2 groups"));
}

#[test]
fn verify_theorem_b_small_orders() {
    let out = chardeg(&["verify", "theorem-b", "--max-order", "1000"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(!text.contains("INCONSISTENT"));
    assert!(text.lines().any(|l| l.starts_with("A7") && l.contains("above --max-order")));
    assert!(text.lines().any(|l| l.starts_with("S9") && l.contains("m = 3")));
    assert!(text.lines().any(|l| l.starts_with("B ") && l.contains("V = 1")));
}
