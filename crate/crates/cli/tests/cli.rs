use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn trialab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trialab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

/// Values of a .bf listing, in index order.
fn values(text: &str) -> Vec<(f64, f64)> {
    text.lines()
        .skip_while(|l| !l.starts_with("bf"))
        .skip(1)
        .filter(|l| !l.starts_with('#'))
        .map(|l| {
            let f: Vec<&str> = l.split_whitespace().collect();
            (f[1].parse().unwrap(), f[2].parse().unwrap())
        })
        .collect()
}

const FC1: &str = "bf 1\n0 1 0\n1 0.41421356237309503 0\n";
const DIGON: &str = "bf 2\n0 1 0\n1 0 0\n2 0 0\n3 1 0\n";
const COLOOP: &str = "bf 1\n0 1 0\n1 1 0\n";
const C1: &str = "adm 2\nedge e0 0 1\nvertex 0 1\n";

#[test]
fn transform_identity_keeps_values() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "f.bf", "bf 2\n0 1 0\n1 0.1 -0.2\n2 3 0\n3 -1e-5 7\n");
    let out = trialab(&["transform", &input, "--mu", "1"]);
    assert!(out.status.success());
    assert_eq!(values(&stdout(&out)), vec![(1.0, 0.0), (0.1, -0.2), (3.0, 0.0), (-1e-5, 7.0)]);
}

#[test]
fn trinity_transform_fixes_ultraloop_image() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "fc1.bf", FC1);
    let out = trialab(&["transform", &input, "--mu", "w", "--normalize"]);
    assert!(out.status.success());
    let v = values(&stdout(&out));
    assert!((v[0].0 - 1.0).abs() < 1e-12 && v[0].1.abs() < 1e-12);
    assert!((v[1].0 - (2f64.sqrt() - 1.0)).abs() < 1e-12 && v[1].1.abs() < 1e-12);
}

#[test]
fn hadamard_maps_digon_cutsets_to_circuits() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "d.bf", DIGON);
    let output = dir.path().join("out.bf");
    let out = trialab(&["transform", &input, "--mu", "-1", "--normalize", "-o", output.to_str().unwrap()]);
    assert!(out.status.success() && stdout(&out).is_empty());
    let v = values(&fs::read_to_string(output).unwrap());
    let expected = [1.0, 0.0, 0.0, 1.0];
    for (x, e) in v.iter().zip(expected) {
        assert!((x.0 - e).abs() < 1e-12 && x.1.abs() < 1e-12);
    }
}

#[test]
fn singular_inverse_is_an_error() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "f.bf", FC1);
    let out = trialab(&["transform", &input, "--mu", "0", "--inverse"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(trialab(&["transform", &input, "--mu", "0"]).status.success());
}

#[test]
fn minors_from_files() {
    let dir = TempDir::new().unwrap();
    let digon = write(dir.path(), "d.bf", DIGON);
    let out = trialab(&["minor", &digon, "--mu", "1", "--element", "1"]);
    assert_eq!(values(&stdout(&out)), vec![(1.0, 0.0), (1.0, 0.0)]);

    let coloop = write(dir.path(), "c.bf", COLOOP);
    let out = trialab(&["minor", &coloop, "--mu", "-1", "--element", "0"]);
    assert!(stdout(&out).starts_with("bf 0\n"));
    assert_eq!(values(&stdout(&out)), vec![(1.0, 0.0)]);

    let out = trialab(&["minor", &coloop, "--mu", "5.828427124746190+0i", "--element", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("pole"));
}

#[test]
fn minor_rejects_unnormalized_input() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "f.bf", "bf 1\n0 2 0\n1 1 0\n");
    assert_eq!(trialab(&["minor", &input, "--mu", "1", "--element", "0"]).status.code(), Some(2));
}

#[test]
fn reducing_the_ultraloop_leaves_nothing() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "c1.adm", C1);
    for mu in ["1", "w", "w2"] {
        let out = trialab(&["dimap", "reduce", &input, "--mu", mu, "--edge", "e0"]);
        assert!(out.status.success());
        assert_eq!(stdout(&out), "adm 0\n");
    }
    assert_eq!(trialab(&["dimap", "reduce", &input, "--mu", "-1", "--edge", "e0"]).status.code(), Some(2));
    assert_eq!(trialab(&["dimap", "reduce", &input, "--mu", "w", "--edge", "zz"]).status.code(), Some(2));
}

#[test]
fn catalog_writes_one_file_per_map() {
    let dir = TempDir::new().unwrap();
    let out_dir = dir.path().join("cat");
    let out = trialab(&["dimap", "catalog", "--edges", "2", "-o", out_dir.to_str().unwrap()]);
    assert!(out.status.success());
    let adm = fs::read_dir(&out_dir)
        .unwrap()
        .filter(|e| e.as_ref().unwrap().path().extension().is_some_and(|x| x == "adm"))
        .count();
    assert_eq!(adm, 4);
    assert!(stdout(&out).contains("total 4"));
    assert!(out_dir.join("summary.txt").exists());
}

#[test]
fn trial_three_times_returns_the_input() {
    let dir = TempDir::new().unwrap();
    let out_dir = dir.path().join("cat");
    trialab(&["dimap", "catalog", "--edges", "3", "-o", out_dir.to_str().unwrap()]);
    for entry in fs::read_dir(&out_dir).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_none_or(|x| x != "adm") {
            continue;
        }
        let mut current = path.clone();
        for step in 0..3 {
            let next = dir.path().join(format!("step{step}.adm"));
            let out = trialab(&["dimap", "trial", current.to_str().unwrap(), "-o", next.to_str().unwrap()]);
            assert!(out.status.success());
            current = next;
        }
        let once = trialab(&["dimap", "trial", path.to_str().unwrap(), "--times", "3"]);
        assert_eq!(stdout(&once), fs::read_to_string(&current).unwrap());
        // dart numbering may differ, so compare through the canonical form
        let a = trialab(&["dimap", "classify", path.to_str().unwrap()]);
        let b = trialab(&["dimap", "classify", current.to_str().unwrap()]);
        assert_eq!(stdout(&a), stdout(&b));
    }
}

#[test]
fn validate_reports_and_sets_exit_code() {
    let dir = TempDir::new().unwrap();
    let good = write(dir.path(), "c1.adm", C1);
    assert!(trialab(&["dimap", "validate", &good]).status.success());
    let bad = write(dir.path(), "bad.adm", "adm 4\nedge a 0 1\nedge b 2 3\nvertex 1 3\nvertex 0 2\n");
    let out = trialab(&["dimap", "validate", &bad]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("incoming or both outgoing"));
    assert_eq!(trialab(&["dimap", "trial", &bad]).status.code(), Some(2));
}

#[test]
fn classify_prints_a_row_per_edge() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "c1.adm", C1);
    let out = trialab(&["dimap", "classify", &input]);
    let text = stdout(&out);
    let row = text.lines().find(|l| l.starts_with("e0 ")).unwrap();
    assert_eq!(row, "e0 0 0 yes yes yes yes yes no yes yes yes no");
}

#[test]
fn verify_suites_and_exit_codes() {
    let out = trialab(&["verify", "transforms", "--seed", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("SUITE transforms PASS"));

    let out = trialab(&["verify", "main-theorem"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).matches("witness").count(), 3);

    assert_eq!(trialab(&["verify", "bogus"]).status.code(), Some(2));
}

#[test]
fn verify_claims_logs_witnesses() {
    let out = trialab(&["verify", "claims"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("SUITE claims PASS"));
    assert!(text.contains("claim3 k=2 catalog=11 qualifying=1"));
}

#[test]
fn seeds_make_runs_repeatable() {
    let a = trialab(&["verify", "minors", "--seed", "9"]);
    let b = trialab(&["verify", "minors", "--seed", "9"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn tolerance_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_trialab"))
        .args(["verify", "transforms"])
        .env("TRIALAB_TOL", "-1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(trialab(&[]).status.code(), Some(2));
    assert_eq!(trialab(&["transform", "missing.bf", "--mu", "1"]).status.code(), Some(2));
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "f.bf", FC1);
    assert_eq!(trialab(&["transform", &input, "--mu", "x"]).status.code(), Some(2));
}

#[test]
fn files_round_trip_through_the_tool() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "f.bf", "bf 1\n0 1 0\n1 0.1 0.30000000000000004\n");
    let first = stdout(&trialab(&["transform", &input, "--mu", "1"]));
    let again = write(dir.path(), "g.bf", &first);
    assert_eq!(stdout(&trialab(&["transform", &again, "--mu", "1"])), first);
}
