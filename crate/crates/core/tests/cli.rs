//! End-to-end runs of the binary: output files, stdout and exit codes.

use std::fs;
use std::process::{Command, Output};

fn middledom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_middledom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_writes_edge_list_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c8.el");
    let o = middledom(&[
        "gen",
        "--family",
        "cycle",
        "--n",
        "8",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().next(), Some("8 8"));
    assert_eq!(text.lines().count(), 9);
    assert!(stdout(&o).contains("order 8 size 8"));
}

#[test]
fn gen_rejects_bad_parameters() {
    assert_eq!(
        middledom(&["gen", "--family", "path", "--n", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        middledom(&["gen", "--family", "path"]).status.code(),
        Some(2)
    );
    assert_eq!(
        middledom(&["gen", "--n", "3", "--bogus"]).status.code(),
        Some(2)
    );
}

#[test]
fn compute_from_file_and_family() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c8.el");
    middledom(&[
        "gen",
        "--family",
        "cycle",
        "--n",
        "8",
        "--out",
        path.to_str().unwrap(),
    ]);

    let o = middledom(&[
        "compute",
        "--input",
        path.to_str().unwrap(),
        "--kind",
        "pdd",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("value: 4"));

    let o = middledom(&[
        "compute",
        "--family",
        "cycle",
        "--n",
        "8",
        "--transform",
        "middle",
        "--kind",
        "pdd",
    ]);
    assert!(stdout(&o).contains("value: 4"));

    let o = middledom(&[
        "compute",
        "--family",
        "complete_bipartite",
        "--n",
        "2",
        "--m",
        "3",
        "--transform",
        "middle",
        "--kind",
        "pdd",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], 2);
    assert_eq!(v["kind"], "pdd");
    assert_eq!(v["status"], "Optimal");
}

#[test]
fn compute_join_of_two_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.el");
    let b = dir.path().join("b.el");
    fs::write(&a, "2 1\n0 1\n").unwrap();
    fs::write(&b, "3 3\n0 1\n1 2\n0 2\n").unwrap();
    let o = middledom(&[
        "compute",
        "--input",
        a.to_str().unwrap(),
        "--transform",
        "join",
        "--second",
        b.to_str().unwrap(),
        "--kind",
        "dom",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "n,m,kind,value,status,witness\n5,10,dom,1,Optimal,{0}\n"
    );
}

#[test]
fn compute_input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let iso = dir.path().join("iso.el");
    fs::write(&iso, "3 1\n0 1\n").unwrap();
    let o = middledom(&["compute", "--input", iso.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("isolated vertex 2"));

    let bad = dir.path().join("bad.el");
    fs::write(&bad, "3 2\n0 1\n1 x\n").unwrap();
    let o = middledom(&["compute", "--input", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));

    let missing = dir.path().join("missing.el");
    assert_eq!(
        middledom(&["compute", "--input", missing.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn compute_budget_exceeded_exits_three() {
    let o = middledom(&[
        "compute",
        "--family",
        "cycle",
        "--n",
        "30",
        "--transform",
        "middle",
        "--node-budget",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("BudgetExceeded"));
}

#[test]
fn verify_middle_path_suite() {
    let o = middledom(&["verify", "--suite", "T45", "--max-n", "13"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 12);
    assert!(rows.iter().all(|r| r.contains(",Match,")));
}

#[test]
fn verify_restriction_suite() {
    let o = middledom(&["verify", "--suite", "L51", "--samples", "20", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).lines().filter(|l| l.contains(",Match,")).count(),
        20
    );
}

#[test]
fn verify_reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let o = middledom(&[
            "verify",
            "--suite",
            "all",
            "--max-n",
            "10",
            "--out",
            path.to_str().unwrap(),
        ]);
        (o.status.code(), fs::read(&path).unwrap())
    };
    let (code_a, a) = run("a.csv");
    let (code_b, b) = run("b.csv");
    assert_eq!(code_a, code_b);
    assert_eq!(a, b);
    assert!(a.starts_with(b"theorem_id,instance,expected,solver_value,verdict,millis,witness\n"));
}

#[test]
fn verify_exit_code_tracks_mismatches() {
    let o = middledom(&["verify", "--suite", "all", "--max-n", "12"]);
    let mismatches = stdout(&o)
        .lines()
        .filter(|l| l.contains(",Mismatch,"))
        .count();
    assert_eq!(o.status.code(), Some(if mismatches > 0 { 1 } else { 0 }));
}

#[test]
fn verify_json_format() {
    let o = middledom(&["verify", "--suite", "T47", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 6);
    assert_eq!(rows[0]["theorem_id"], "T47_double_star");
    assert_eq!(rows[0]["verdict"], "Match");
}

#[test]
fn verify_unknown_suite_is_usage_error() {
    assert_eq!(
        middledom(&["verify", "--suite", "T99"]).status.code(),
        Some(2)
    );
}

#[test]
fn sweep_trees() {
    let o = middledom(&[
        "sweep", "--trees", "100", "--n-min", "5", "--n-max", "10", "--seed", "9",
    ]);
    let text = stdout(&o);
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let headers = rdr.headers().unwrap().clone();
    let col = |name: &str| headers.iter().position(|h| h == name).unwrap();
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 100);
    for r in &rows {
        for c in ["chain_o31", "chain_o32", "bounds_t35"] {
            assert_eq!(&r[col(c)], "Match", "{r:?}");
        }
    }
    let any_mismatch = rows.iter().any(|r| r.iter().any(|c| c == "Mismatch"));
    assert_eq!(o.status.code(), Some(if any_mismatch { 1 } else { 0 }));
}

#[test]
fn sweep_graphs_path_bound() {
    let o = middledom(&["sweep", "--graphs", "50", "--n-max", "8", "--seed", "3"]);
    let text = stdout(&o);
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 50);
    for r in &rows {
        let gprd: usize = r[6].parse().unwrap();
        let bound: usize = r[7].parse().unwrap();
        assert!(gprd <= bound, "{r:?}");
    }
}

#[test]
fn sweep_zero_trees_is_header_only() {
    let o = middledom(&["sweep", "--trees", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn sweep_needs_a_population() {
    assert_eq!(middledom(&["sweep"]).status.code(), Some(2));
    assert_eq!(
        middledom(&["sweep", "--trees", "1", "--graphs", "1"])
            .status
            .code(),
        Some(2)
    );
}
