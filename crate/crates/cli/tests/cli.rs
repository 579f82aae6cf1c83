use std::process::{Command, Output};

fn coxperc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxperc"))
        .args(args)
        .env_remove("COXPERC_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn group_summaries() {
    let o = coxperc(&["group", "--system", "A2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(
        s.contains("order 6\n") && s.contains("reflections 3\n"),
        "{s}"
    );

    let o = coxperc(&["group", "--system", "F4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(
        (v["order"].as_u64(), v["reflections"].as_u64()),
        (Some(1152), Some(24))
    );

    let s = stdout(&coxperc(&["group", "--system", "I2(7)"]));
    assert!(s.contains("order 14\n"));
}

#[test]
fn strong_all_starts_on_f4() {
    let o = coxperc(&[
        "strong",
        "--system",
        "F4",
        "--I",
        "s2,s3,s4",
        "--all-starts",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let certs = v.as_array().unwrap();
    assert_eq!(certs.len(), 23);
    assert!(certs
        .iter()
        .all(|c| c["verified"] == true && c["kind"] == "strong"));
}

#[test]
fn search_blow_up_is_negative() {
    let o = coxperc(&[
        "search",
        "--system",
        "A2xI2(2)",
        "--I",
        "s1,s3",
        "--mode",
        "reflections",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).ends_with("NOT_FOUND\n"));
    let o = coxperc(&[
        "search", "--system", "A2xI2(2)", "--I", "s1,s3", "--J", "s2,s4", "--mode", "cut",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let o = coxperc(&["search", "--system", "A2", "--I", "s1", "--start", "0,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("FOUND\n"));
}

#[test]
fn search_guard_and_bad_input() {
    // A4 / <s1> has 60 cosets, far beyond the 2^20 state cap
    let o = coxperc(&["search", "--system", "A4", "--I", "s1", "--start", "0,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("GUARD"));
    let o = coxperc(&["search", "--system", "A2", "--I", "s1", "--mode", "cut"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exponent_csv_row() {
    let o = coxperc(&[
        "exponent", "--system", "F4", "--I", "s2,s3,s4", "--J", "s1,s2,s3", "--format", "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let mut rdr = csv::Reader::from_reader(s.as_bytes());
    let headers = rdr.headers().unwrap().clone();
    let row = rdr.records().next().unwrap().unwrap();
    let get = |k: &str| row[headers.iter().position(|h| h == k).unwrap()].to_string();
    assert_eq!(get("c"), "23/120");
    assert_eq!(get("exponent"), "217/120");
    assert!(get("note").contains("109/60"));
}

#[test]
fn exponent_inclusion_and_balanced() {
    let o = coxperc(&["exponent", "--inclusion", "10,1,2"]);
    assert_eq!(o.status.code(), Some(1));
    let o = coxperc(&["exponent", "--inclusion", "6,2,3"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&coxperc(&["exponent", "--balanced", "48,6"]));
    assert!(s.starts_with("c 23/120\n"), "{s}");
    assert_eq!(
        coxperc(&["exponent", "--inclusion", "5,3,3"]).status.code(),
        Some(2)
    );
}

#[test]
fn errors_exit_two() {
    let o = coxperc(&["group", "--system", "Q9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("UNKNOWN_SYSTEM"));
    let o = coxperc(&["strong", "--system", "A3", "--I", "s1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("BAD_SUBSET"));
}

#[test]
fn cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_coxperc"))
        .args(["group", "--system", "F4"])
        .env("COXPERC_CAP", "100")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("CAP_EXCEEDED"));
}

#[test]
fn matrix_file_and_out() {
    let dir = tempfile::tempdir().unwrap();
    let sys = dir.path().join("b2.json");
    std::fs::write(
        &sys,
        r#"{"name":"mine","generators":["a","b"],"matrix":[[1,4],[4,1]]}"#,
    )
    .unwrap();
    let out = dir.path().join("group.txt");
    let o = coxperc(&[
        "group",
        "--matrix-file",
        sys.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let s = std::fs::read_to_string(&out).unwrap();
    assert!(
        s.contains("order 8\n") && s.contains("quotient I={b} size 4"),
        "{s}"
    );

    std::fs::write(
        &sys,
        r#"{"name":"bad","generators":["a","b"],"matrix":[[1,3],[4,1]]}"#,
    )
    .unwrap();
    let o = coxperc(&["group", "--matrix-file", sys.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("ASYMMETRIC_MATRIX"));
}

#[test]
fn graph_formats() {
    let o = coxperc(&[
        "graph", "--system", "A2", "--I", "s1", "--J", "s2", "--format", "dot",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("graph ") && s.matches(" -- ").count() == 6);
    let o = coxperc(&[
        "graph",
        "--system",
        "A3",
        "--parts",
        "s2,s3;s1,s3;s1,s2",
        "--format",
        "text",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("edges 24"));
    let o = coxperc(&[
        "graph",
        "--system",
        "A3",
        "--parts",
        "s2,s3;s1,s3;s1,s2",
        "--format",
        "dot",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn percolate_and_audit_and_homcheck() {
    let o = coxperc(&["percolate", "--system", "A2", "--I", "s1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(s2,+) (s1,+)"), "{}", stdout(&o));
    let o = coxperc(&["audit", "--system", "B2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("exhaustive"));
    let o = coxperc(&[
        "homcheck", "--system", "I2(2)", "--I", "s1", "--J", "s2", "--host", "2:0-1", "--trials",
        "10",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = coxperc(&[
        "homcheck", "--system", "F4", "--I", "s2,s3,s4", "--J", "s1,s2,s3", "--host", "3:0-1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("BUDGET_EXCEEDED"));
}

#[test]
fn catalog_is_deterministic() {
    let args = [
        "catalog",
        "--systems",
        "A3,B3,H3,I2(5)",
        "--seed",
        "0",
        "--format",
        "csv",
    ];
    let a = coxperc(&args);
    let b = coxperc(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let s = stdout(&a);
    assert!(
        s.contains("A3,3,\"s2,s3\",\"s1,s2\",4,4,12,3,3,3/8,13/8,"),
        "{s}"
    );
}
