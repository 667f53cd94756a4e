use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn ohminor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ohminor"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn g1() -> String {
    fixture("g1.txt").display().to_string()
}

#[test]
fn traditional_charpoly_of_g1() {
    let o = ohminor(&["charpoly", "--kind", "traditional", &g1()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "x^4 - 10x^3 + 32x^2 - 32x\n");
}

#[test]
fn cofactor_of_g1() {
    let o = ohminor(&["cofactor", "--u", "v2", "--w", "v2", &g1()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "-8\n");
}

#[test]
fn verify_zero_matrix() {
    let zero = fixture("zero.txt").display().to_string();
    let o = ohminor(&["verify", "--suite", "all", &zero]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn verify_fixtures_with_oracle() {
    for name in ["g1.txt", "g2.txt"] {
        let path = fixture(name).display().to_string();
        let o = ohminor(&["verify", "--suite", "oracle", &path]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));
    }
}

#[test]
fn output_does_not_depend_on_worker_count() {
    let g2 = fixture("g2.txt").display().to_string();
    for args in [
        vec!["charpoly", "--kind", "total-minor", "--format", "machine"],
        vec!["charpoly", "--kind", "extended", "--side", "dual"],
        vec!["contributors", "--classes", "tail"],
        vec!["verify"],
    ] {
        let run = |workers: &str| {
            let mut a = args.clone();
            a.extend(["--workers", workers, g2.as_str()]);
            ohminor(&a).stdout
        };
        let one = run("1");
        assert!(!one.is_empty());
        assert_eq!(one, run("4"), "{args:?}");
    }
}

#[test]
fn cap_exceeded_reports_the_prediction() {
    let o = ohminor(&["--cap", "3", "contributors", &g1()]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("would visit 76"), "{err}");
}

#[test]
fn usage_errors_exit_with_one() {
    assert_eq!(ohminor(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(ohminor(&["charpoly", &g1()]).status.code(), Some(1));
    assert_eq!(
        ohminor(&["--cap", "0", "laplacian", &g1()]).status.code(),
        Some(1)
    );
    assert_eq!(
        ohminor(&["laplacian", "--format", "dot", &g1()]).status.code(),
        Some(1)
    );
    assert_eq!(
        ohminor(&["laplacian", "/nonexistent/h.txt"]).status.code(),
        Some(1)
    );
    assert!(ohminor(&["--help"]).status.success());
}

#[test]
fn malformed_matrix_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "2 2\n1 0\n").unwrap();
    let o = ohminor(&["laplacian", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("expected 2 rows"));
}

#[test]
fn built_document_round_trips_through_out() {
    let dir = tempfile::tempdir().unwrap();
    let doc = dir.path().join("g1.json");
    let o = ohminor(&["build", "--out", doc.to_str().unwrap(), &g1()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let from_doc = ohminor(&["charpoly", "--kind", "diagonal", doc.to_str().unwrap()]);
    let from_matrix = ohminor(&["charpoly", "--kind", "diagonal", &g1()]);
    assert!(from_doc.status.success());
    assert_eq!(from_doc.stdout, from_matrix.stdout);
    assert!(stdout(&from_doc).contains("-8  x[v2,v2]\n"));
}

#[test]
fn laplacian_and_dual() {
    let o = ohminor(&["laplacian", &g1()]);
    assert_eq!(stdout(&o), "4 4\n3 -1 -1 -1\n-1 2 -1 0\n-1 -1 3 -1\n-1 0 -1 2\n");
    let d = ohminor(&["dual", "--format", "machine", &g1()]);
    let doc: serde_json::Value = serde_json::from_slice(&d.stdout).unwrap();
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 5);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 4);
}

#[test]
fn machine_cofactor_and_contributors() {
    let o = ohminor(&["cofactor", "--u", "v2", "--w", "v2", "--format", "machine", &g1()]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["cofactor"], "-8");

    let o = ohminor(&[
        "contributors",
        "--u",
        "v2",
        "--w",
        "v2",
        "--edge-monic",
        "--format",
        "machine",
        &g1(),
    ]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let cs = doc["contributors"].as_array().unwrap();
    let sum: i64 = cs.iter().map(|c| c["csgn"].as_i64().unwrap()).sum();
    assert_eq!(sum, -8);
}

#[test]
fn dot_exports() {
    let o = ohminor(&["export-dot", &g1()]);
    assert!(stdout(&o).starts_with("digraph hypergraph {"));
    let o = ohminor(&[
        "contributors",
        "--u",
        "v2",
        "--w",
        "v2",
        "--edge-monic",
        "--format",
        "dot",
        &g1(),
    ]);
    let listed = ohminor(&["contributors", "--u", "v2", "--w", "v2", "--edge-monic", &g1()]);
    let count = stdout(&listed).lines().count() - 1;
    assert_eq!(stdout(&o).matches("digraph contributor {").count(), count);
}
