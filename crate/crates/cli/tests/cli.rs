use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn lonesum(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lonesum"))
        .args(args)
        .env_remove("LONESUM_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    if let Some(text) = stdin {
        child
            .stdin
            .take()
            .unwrap()
            .write_all(text.as_bytes())
            .unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).expect("stdout is one JSON payload")
}

const EXAMPLE_STRONG: &str = "3 3 3\n0 1 0\n1 2 1\n0 1 0\n";
const IDENTITY: &str = "2 2 2\n1 0\n0 1\n";
const T: &str = "3 6 6
0 1 2 0 0 0
1 1 0 0 0 1
1 1 1 2 0 1
1 2 2 2 1 1
1 2 2 2 2 0
2 2 2 0 0 0
";

#[test]
fn check_exit_codes() {
    assert_eq!(
        lonesum(&["check", "-"], Some(EXAMPLE_STRONG)).status.code(),
        Some(0)
    );
    let o = lonesum(&["check", "-"], Some(IDENTITY));
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness"));
    assert_eq!(
        lonesum(&["check", "--weak", "--budget", "1", "-"], Some(T))
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        lonesum(&["check", "--weak", "-"], Some(T)).status.code(),
        Some(1)
    );
}

#[test]
fn check_reads_files() {
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("example_strong.txt");
    std::fs::write(&path, EXAMPLE_STRONG).unwrap();
    let o = lonesum(&["check", "--json", path.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["verdict"], "lonesum");
    assert_eq!(
        lonesum(&["check", "/nonexistent/matrix.txt"], None)
            .status
            .code(),
        Some(66)
    );
}

#[test]
fn usage_and_parse_errors() {
    assert_eq!(lonesum(&["check"], None).status.code(), Some(64));
    assert_eq!(lonesum(&["frobnicate"], None).status.code(), Some(64));
    assert_eq!(
        lonesum(&["count", "--q", "3", "--n", "2"], None)
            .status
            .code(),
        Some(64)
    );
    assert_eq!(lonesum(&["--help"], None).status.code(), Some(0));
    assert_eq!(lonesum(&["--version"], None).status.code(), Some(0));
    let o = lonesum(&["check", "-"], Some("2 2 2\n1 0\n0 7\n"));
    assert_eq!(o.status.code(), Some(65));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn budget_from_environment() {
    let run = |env: &str| {
        let mut child = Command::new(env!("CARGO_BIN_EXE_lonesum"))
            .args(["check", "--weak", "-"])
            .env("LONESUM_BUDGET", env)
            .stdin(Stdio::piped())
            .stdout(Stdio::null())
            .stderr(Stdio::null())
            .spawn()
            .unwrap();
        child.stdin.take().unwrap().write_all(T.as_bytes()).unwrap();
        child.wait().unwrap().code()
    };
    assert_eq!(run("1"), Some(2));
    assert_eq!(run("100000"), Some(1));
    assert_eq!(run("lots"), Some(64));
}

#[test]
fn counts() {
    assert_eq!(
        stdout(&lonesum(
            &["count", "--q", "3", "--m", "2", "--n", "2"],
            None
        ))
        .trim(),
        "50"
    );
    assert_eq!(
        stdout(&lonesum(
            &["count", "--q", "2", "--symmetric", "--n", "5"],
            None
        ))
        .trim(),
        "1082"
    );
    assert_eq!(
        stdout(&lonesum(
            &["count", "--q", "2", "--m", "2", "--n", "2", "--stairs", "2"],
            None
        ))
        .trim(),
        "4"
    );
    let o = lonesum(
        &["count", "--q", "2", "--m", "30", "--n", "30", "--json"],
        None,
    );
    let v = json(&o);
    assert!(v["count"].as_str().unwrap().len() > 40);
    assert!(v["certificate"].is_null());
}

#[test]
fn reconstruct_opening_example() {
    let o = lonesum(
        &[
            "reconstruct",
            "--q",
            "2",
            "--rows",
            "2,1,3",
            "--cols",
            "3,2,1",
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "unique\n2 3 3\n1 1 0\n1 0 0\n1 1 1\n");
    let amb = lonesum(
        &[
            "reconstruct",
            "--q",
            "3",
            "--rows",
            "1,4,2",
            "--cols",
            "1,4,2",
            "--json",
        ],
        None,
    );
    assert_eq!(amb.status.code(), Some(1));
    assert_eq!(json(&amb)["verdict"], "ambiguous");
}

#[test]
fn series_tables() {
    let o = lonesum(&["series", "--q", "3", "--order", "2"], None);
    let text = stdout(&o);
    assert!(text.starts_with("m\tn\tvalue\n"));
    assert!(text.contains("2\t2\t50\n"));
    let fixed = json(&lonesum(
        &[
            "series",
            "--q",
            "2",
            "--fixed-index",
            "2",
            "--order",
            "4",
            "--json",
        ],
        None,
    ));
    assert_eq!(fixed["certificate"]["coefficients"][2]["value"], "14");
    let sym = stdout(&lonesum(
        &["series", "--q", "2", "--symmetric", "--order", "5"],
        None,
    ));
    assert!(sym.ends_with("5\t5\t1082\n"));
}

#[test]
fn bijection_roundtrip() {
    let matrix = "2 2 3\n1 1 0\n1 0 0\n";
    let perm = stdout(&lonesum(&["bijection", "to-perm", "-"], Some(matrix)));
    let mut args = vec!["bijection", "from-perm", "--m", "2", "--n", "3"];
    args.extend(perm.split_whitespace());
    assert_eq!(stdout(&lonesum(&args, None)), matrix);
    let bad = lonesum(
        &["bijection", "from-perm", "--m", "1", "--n", "1", "1", "1"],
        None,
    );
    assert_eq!(bad.status.code(), Some(64));
    assert_eq!(
        lonesum(&["bijection", "to-perm", "-"], Some(IDENTITY))
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn weak_search_reports() {
    let o = lonesum(&["weak-search", "--json", "-"], Some(T));
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["verdict"], "not_lonesum");
    assert!(v["certificate"]["search"]["cycle"].is_null());
    assert!(v["certificate"]["search"]["small_forbidden"].is_null());
    assert_eq!(
        v["certificate"]["alternative"]["rows"][0],
        serde_json::json!([1, 2, 0, 0, 0, 0])
    );
}

#[test]
fn oracle_reports() {
    let v: Value = serde_json::from_str(&stdout(&lonesum(
        &["oracle", "--q", "3", "--m", "2", "--n", "2"],
        None,
    )))
    .unwrap();
    assert_eq!(v["lonesum"], 50);
    assert_eq!(v["total"], 81);
    assert_eq!(v["mismatches"], serde_json::json!([]));
    let sym = json(&lonesum(
        &[
            "oracle",
            "--q",
            "2",
            "--m",
            "3",
            "--n",
            "3",
            "--symmetric",
            "--json",
        ],
        None,
    ));
    assert_eq!(sym["count"], "26");
    assert_eq!(
        lonesum(&["oracle", "--q", "2", "--m", "5", "--n", "5"], None)
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn cli_payload_matches_library() {
    let o = json(&lonesum(
        &["count", "--q", "4", "--m", "3", "--n", "3", "--json"],
        None,
    ));
    let lib =
        lonesum::report::count(4, lonesum::report::CountQuery::Lonesum { m: 3, n: 3 }).unwrap();
    let lib: Value = serde_json::from_str(&lib.to_json()).unwrap();
    for field in ["verdict", "certificate", "count"] {
        assert_eq!(o[field], lib[field]);
    }
}
