mod common;

use std::process::{Command, Output};

use cliquescope::generators;

fn cliquescope(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cliquescope"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn count_k5() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k5.txt");
    common::write_edge_list(&path, &generators::complete(5));
    let out = stdout(&cliquescope(&[
        "count",
        path.to_str().unwrap(),
        "--kmax",
        "5",
    ]));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let counts: Vec<&str> = v["counts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["count"].as_str().unwrap())
        .collect();
    assert_eq!(counts, ["5", "10", "10", "5", "1"]);
    assert_eq!(v["nodes"], 5);
}

#[test]
fn count_triangle_free_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.txt");
    common::write_edge_list(&path, &generators::cycle(5));
    let out = stdout(&cliquescope(&[
        "count",
        path.to_str().unwrap(),
        "--format",
        "csv",
    ]));
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("j,count"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 10);
    assert!(rows[2..].iter().all(|r| r.ends_with(",0")));
}

#[test]
fn count_per_node_uses_original_ids() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("paw.txt");
    // paw: triangle 10-20-30 with pendant 40 on 10
    std::fs::write(&path, "10 20\n20 30\n10 30\n10 40\n").unwrap();
    let out = stdout(&cliquescope(&[
        "count",
        path.to_str().unwrap(),
        "--kmax",
        "3",
        "--per-node",
        "--format",
        "csv",
    ]));
    assert_eq!(
        out,
        "node,C_1,C_2,C_3\n10,1,3,1\n20,1,2,1\n30,1,2,1\n40,1,1,0\n"
    );
}

#[test]
fn profile_of_k4() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k4.txt");
    common::write_edge_list(&path, &generators::complete(4));
    let out = stdout(&cliquescope(&[
        "profile",
        path.to_str().unwrap(),
        "--k",
        "4",
    ]));
    let row = out.lines().nth(1).unwrap();
    let values: Vec<f64> = row.split(',').skip(2).map(|x| x.parse().unwrap()).collect();
    assert_eq!(
        format!("{:.4}, {:.4}", values[0], values[1]),
        "0.9701, 0.2425"
    );
}

#[test]
fn profile_of_dataset_has_one_row_per_graph() {
    let dir = tempfile::tempdir().unwrap();
    common::write_toy_dataset(dir.path(), "TOY");
    let out = stdout(&cliquescope(&[
        "profile",
        "--dataset",
        dir.path().to_str().unwrap(),
        "--name",
        "TOY",
        "--k",
        "6",
        "--extended",
    ]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "graph_id,label,f1,f2,f3,f4,f5");
    assert_eq!(lines.len(), 41);
}

#[test]
fn hocc_star_stream_has_zero_mu3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("star.txt");
    let text: String = (1..=240).map(|i| format!("0 {i} {i}\n")).collect();
    std::fs::write(&path, text).unwrap();
    let out = stdout(&cliquescope(&[
        "hocc",
        path.to_str().unwrap(),
        "--kmax",
        "4",
    ]));
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("k,snapshot_index,mu"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 2 * 120);
    assert!(rows.iter().filter(|r| r[0] == "3").all(|r| r[2] == "0"));
}

#[test]
fn classify_writes_report_and_features() {
    let dir = tempfile::tempdir().unwrap();
    common::write_toy_dataset(dir.path(), "TOY");
    let report = dir.path().join("report.json");
    let features = dir.path().join("features.csv");
    let out = cliquescope(&[
        "classify",
        "--dataset",
        dir.path().to_str().unwrap(),
        "--name",
        "TOY",
        "--k",
        "4",
        "--extended",
        "--repeats",
        "3",
        "--output",
        report.to_str().unwrap(),
        "--export-features",
        features.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(
        stderr.contains("TOY D_4: ") && stderr.contains('±'),
        "{stderr}"
    );

    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["feature_spec"], "D_4");
    assert_eq!(v["seed"], 0);
    assert_eq!(v["fold_accuracies"].as_array().unwrap().len(), 30);
    assert!(v["mean"].as_f64().unwrap() > 90.0);
    let csv = std::fs::read_to_string(&features).unwrap();
    assert!(csv.starts_with("graph_id,label,f1,f2,f3\n"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("nope.txt");
    assert_eq!(
        cliquescope(&["count", missing.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );

    let path = dir.path().join("g.txt");
    common::write_edge_list(&path, &generators::complete(4));
    assert_eq!(
        cliquescope(&["count", path.to_str().unwrap(), "--kmax", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(cliquescope(&["bogus"]).status.code(), Some(2));

    // a class smaller than the fold count is a pipeline failure
    common::write_toy_dataset(dir.path(), "TOY");
    let out = cliquescope(&[
        "classify",
        "--dataset",
        dir.path().to_str().unwrap(),
        "--name",
        "TOY",
        "--folds",
        "30",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("fewer than 30 folds"));
}
