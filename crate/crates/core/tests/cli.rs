use std::process::{Command, Output};

fn fundamental(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fundamental")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn text_output() {
    let o = fundamental(&["basis", "fatom", "1,3,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x1*x2^3*x3\n");

    let o = fundamental(&["expand", "--in", "fatom", "Fq[2] --vars 2"]);
    assert_eq!(stdout(&o), "A[2,0] + A[0,2]\n");
}

#[test]
fn shuffles_mark_descents_and_empty_runs() {
    let o = fundamental(&["shuffles", "--kind", "fundamental", "0,2,1", "0,3,1"]);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 8);
    assert!(out.lines().any(|l| l.starts_with("*|33444|12 ")));
}

#[test]
fn parse_errors_exit_two_with_column() {
    let o = fundamental(&["expand", "--in", "fatom", "F[0,2,,1]"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("column 7"));
    assert!(o.stdout.is_empty());

    let o = fundamental(&["basis", "nonsense", "1,2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn domain_errors_exit_three() {
    let o = fundamental(&["expand", "--in", "fatom", "Fq[0,2] --vars 2"]);
    assert_eq!(o.status.code(), Some(3));
    let o = fundamental(&["expand", "--in", "fatom", "F[1,0,1] --vars 2"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_exit_code_and_json() {
    let o = fundamental(&["--output", "json", "verify", "--max-weight", "2", "--max-length", "2", "--only", "slide-definitions,braid-pi"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["checks"].as_array().unwrap().len(), 2);

    let o = fundamental(&["verify", "--only", "no-such-check"]);
    assert_ne!(o.status.code(), Some(0));
}

#[test]
fn method_both_compares_constructions() {
    let o = fundamental(&["basis", "fatom", "0,0,3,2,0,1", "--method", "both"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("combinatorial - operator: 0\n"));

    let o = fundamental(&["--output", "json", "basis", "gessel", "1,2", "--vars", "3", "--method", "both"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["agree"], true);
    assert_eq!(v["methods"].as_array().unwrap().len(), 3);

    let o = fundamental(&["basis", "key", "0,1", "--method", "both"]);
    assert_eq!(o.status.code(), Some(3));
}
