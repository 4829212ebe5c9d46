use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use polyhopf_cli::format::Ensemble;

fn polyhopf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyhopf"))
        .args(args)
        .env_remove("POLYHOPF_DEFAULT_TOL")
        .output()
        .expect("binary runs")
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn sample(dir: &Path, name: &str, algebra: &str, k: &str, count: &str, seed: &str) -> String {
    let out = path(dir, name);
    let o = polyhopf(&["sample", "--algebra", algebra, "--k", k, "--count", count, "--seed", seed, "--out", &out]);
    assert!(o.status.success(), "{}", stderr(&o));
    out
}

fn load(p: &str) -> Ensemble {
    serde_json::from_str(&fs::read_to_string(p).unwrap()).unwrap()
}

fn reported(o: &Output, key: &str) -> f64 {
    let text = stdout(o);
    let rest = &text[text.find(key).unwrap_or_else(|| panic!("{key} missing from {text}")) + key.len()..];
    rest.trim_start().split([',', ' ', '\n']).next().unwrap().parse().unwrap()
}

#[test]
fn sample_writes_closed_octonion_polygons() {
    let dir = tempfile::tempdir().unwrap();
    let o = polyhopf(&["sample", "--algebra", "O", "--k", "16", "--count", "100", "--seed", "42", "--out", &path(dir.path(), "o.json")]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("mean edge length"));
    assert!(reported(&o, "max closure residual") <= 1e-10);
    let e = load(&path(dir.path(), "o.json"));
    assert_eq!((e.algebra.as_str(), e.k, e.n, e.seed, e.polygons.len()), ("O", 16, 9, 42, 100));
    for polygon in e.configs().unwrap() {
        assert!(polygon.closure_residual() <= 1e-10);
        assert!((polygon.perimeter() - 1.0).abs() <= 1e-10);
    }
}

#[test]
fn sample_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let a = sample(dir.path(), "a.json", "H", "9", "64", "7");
    let b = sample(dir.path(), "b.json", "H", "9", "64", "7");
    assert_eq!(fs::read(a).unwrap(), fs::read(b).unwrap());
    let c = sample(dir.path(), "c.json", "H", "9", "64", "8");
    assert_ne!(fs::read(path(dir.path(), "a.json")).unwrap(), fs::read(c).unwrap());
}

#[test]
fn sample_to_stdout_matches_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = sample(dir.path(), "a.json", "C", "5", "3", "1");
    let o = polyhopf(&["sample", "--algebra", "C", "--k", "5", "--count", "3", "--seed", "1"]);
    assert!(o.status.success());
    assert_eq!(o.stdout, fs::read(file).unwrap());
    assert!(stderr(&o).contains("mean edge length"));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["sample", "--algebra", "O", "--k", "2"][..],
        &["sample", "--algebra", "X", "--k", "4"],
        &["sample", "--algebra", "R", "--k", "4", "--count", "0"],
        &["verify", "--suite", "everything"],
        &["verify", "--tol", "-1"],
        &["frobnicate"],
    ] {
        let o = polyhopf(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn invalid_tolerance_env_is_a_usage_error() {
    let o = Command::new(env!("CARGO_BIN_EXE_polyhopf"))
        .args(["verify", "--suite", "algebra", "--trials", "2"])
        .env("POLYHOPF_DEFAULT_TOL", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn unwritable_output_fails() {
    let dir = tempfile::tempdir().unwrap();
    let o = polyhopf(&["sample", "--algebra", "R", "--k", "4", "--out", &path(dir.path(), "missing/x.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("missing"));
}

#[test]
fn verify_algebra_reports_moufang_residuals() {
    let o = polyhopf(&["verify", "--suite", "algebra", "--trials", "10000"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["passed"], true);
    let props = report["properties"].as_array().unwrap();
    let moufang: Vec<_> = props.iter().filter(|p| p["name"].as_str().unwrap().starts_with("moufang")).collect();
    assert_eq!(moufang.len(), 3);
    for p in moufang {
        assert!(p["max_residual"].as_f64().unwrap() <= 1e-12);
        assert_eq!(p["trials"], 10000);
    }
}

#[test]
fn verify_polygon_passes() {
    let o = polyhopf(&["verify", "--suite", "polygon", "--trials", "1000", "--seed", "3"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["passed"], true);
    assert_eq!(report["seed"], 3);
}

#[test]
fn verify_is_deterministic() {
    let a = polyhopf(&["verify", "--suite", "all", "--trials", "5", "--seed", "9"]);
    let b = polyhopf(&["verify", "--suite", "all", "--trials", "5", "--seed", "9"]);
    assert!(a.status.success(), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn injected_fault_names_moufang() {
    let o = polyhopf(&["verify", "--suite", "algebra", "--trials", "200", "--seed", "4", "--inject-fault"]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("moufang-middle"), "{err}");
    assert!(err.contains("--seed 4"));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["passed"], false);
}

#[test]
fn identity_action_keeps_polygons() {
    let dir = tempfile::tempdir().unwrap();
    let input = sample(dir.path(), "in.json", "H", "6", "20", "5");
    let out = path(dir.path(), "out.json");
    let o = polyhopf(&["act", "--in", &input, "--out", &out, "--action", "identity"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(fs::read(input).unwrap(), fs::read(out).unwrap());
}

#[test]
fn rotation_action_preserves_gram_matrices() {
    let dir = tempfile::tempdir().unwrap();
    for algebra in ["R", "C", "H", "O"] {
        let input = sample(dir.path(), "in.json", algebra, "12", "30", "6");
        let out = path(dir.path(), "out.json");
        let o = polyhopf(&["act", "--in", &input, "--out", &out, "--action", "rotation", "--seed", "2"]);
        assert!(o.status.success(), "{}", stderr(&o));
        assert!(reported(&o, "max gram deviation") <= 1e-10);
        assert_ne!(load(&input), load(&out));
    }
}

#[test]
fn octonion_word_action_preserves_closure() {
    let dir = tempfile::tempdir().unwrap();
    let input = sample(dir.path(), "in.json", "O", "10", "30", "11");
    let out = path(dir.path(), "out.json");
    let o = polyhopf(&["act", "--in", &input, "--out", &out, "--word-length", "4", "--seed", "3"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(reported(&o, "max closure residual") <= 1e-10);
    assert!(reported(&o, "max gram deviation") <= 1e-9);
    for p in load(&out).configs().unwrap() {
        assert!(p.closure_residual() <= 1e-10);
    }
}

#[test]
fn spin_action_over_associative_algebras() {
    let dir = tempfile::tempdir().unwrap();
    for algebra in ["R", "C", "H"] {
        let input = sample(dir.path(), "in.json", algebra, "7", "20", "12");
        let o = polyhopf(&["act", "--in", &input, "--out", &path(dir.path(), "out.json"), "--action", "spin"]);
        assert!(o.status.success(), "{algebra}: {}", stderr(&o));
        assert!(reported(&o, "max gram deviation") <= 1e-9);
    }
}

#[test]
fn mismatched_action_dimension_fails() {
    let dir = tempfile::tempdir().unwrap();
    let input = sample(dir.path(), "in.json", "H", "5", "3", "1");
    let o = polyhopf(&["act", "--in", &input, "--word-length", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("dimension mismatch"));
    let o = polyhopf(&["act", "--in", &input, "--algebra", "O"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn lift_round_trips_through_phi() {
    let dir = tempfile::tempdir().unwrap();
    let input = sample(dir.path(), "in.json", "O", "8", "10", "13");
    let frames = path(dir.path(), "frames.json");
    let o = polyhopf(&["lift", "--in", &input, "--out", &frames, "--seed", "1"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(reported(&o, "max round-trip error") <= 1e-9);
    let f: polyhopf_cli::format::FrameEnsemble = serde_json::from_str(&fs::read_to_string(frames).unwrap()).unwrap();
    assert_eq!(f.frames().unwrap().len(), 10);
}

#[test]
fn stats_emits_histogram_csv() {
    let dir = tempfile::tempdir().unwrap();
    let input = sample(dir.path(), "in.json", "C", "8", "25", "14");
    let o = polyhopf(&["stats", "--in", &input, "--bins", "10"]);
    assert!(o.status.success());
    let csv = stdout(&o);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("bin_start,bin_end,count"));
    let total: usize = lines.map(|l| l.rsplit(',').next().unwrap().parse::<usize>().unwrap()).sum();
    assert_eq!(total, 200);
}

#[test]
fn missing_input_fails() {
    let o = polyhopf(&["stats", "--in", "/nonexistent/ensemble.json"]);
    assert_eq!(o.status.code(), Some(1));
}
