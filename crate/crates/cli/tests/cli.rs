//! Golden files live in `tests/golden`; set `UPDATE_GOLDEN=1` to rewrite them.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(args: &[&str], out: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_growthrate"))
        .args(args)
        .arg("--out")
        .arg(out)
        .output()
        .expect("binary runs")
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn check_golden(name: &str, actual: &str) {
    let path = golden(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(actual, expected, "{name} differs from its golden file");
}

fn analyze(rep: &str) -> String {
    let dir = TempDir::new().unwrap();
    let out = run(&["--rep", rep, "--cmd", "analyze"], dir.path());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    fs::read_to_string(dir.path().join("report.json")).unwrap()
}

fn json(text: &str) -> serde_json::Value {
    serde_json::from_str(text).unwrap()
}

fn rational(v: &serde_json::Value) -> (i64, i64) {
    (v["num"].as_i64().unwrap(), v["den"].as_i64().unwrap())
}

#[test]
fn analyze_standard_a3() {
    let text = analyze("A3: std");
    let v = json(&text);
    assert_eq!(rational(&v["d"]), (6, 1));
    assert_eq!(v["e"], 0);
    assert_eq!(rational(&v["lambda"]), (1, 3));
    check_golden("analyze_std_a3.json", &text);
}

#[test]
fn analyze_adjoint_a3() {
    let text = analyze("A3: adj");
    let v = json(&text);
    assert_eq!(rational(&v["d"]), (2, 1));
    assert_eq!(v["e"], 1);
    check_golden("analyze_adj_a3.json", &text);
}

#[test]
fn analyze_std_plus_dual() {
    let text = analyze("A3: std + dual(std)");
    let v = json(&text);
    assert_eq!(rational(&v["d"]), (4, 1));
    assert_eq!(rational(&v["tau"]), (1, 1));
    assert_eq!(rational(&v["xi"]), (1, 1));
    check_golden("analyze_std_dual_a3.json", &text);
}

#[test]
fn analyze_product() {
    let text = analyze("A2: std x A2: adj");
    let v = json(&text);
    assert_eq!(rational(&v["d"]), (2, 1));
    assert_eq!(v["normalGrowthStrict"], false);
    check_golden("analyze_product.json", &text);
}

#[test]
fn expand_sinh_golden() {
    let dir = TempDir::new().unwrap();
    assert!(run(&["--rep", "A3: std", "--cmd", "expand-sinh"], dir.path()).status.success());
    let text = fs::read_to_string(dir.path().join("expansion.json")).unwrap();
    assert_eq!(json(&text).as_array().unwrap().len(), 6);
    check_golden("expand_sinh_a3.json", &text);
}

#[test]
fn reports_are_canonical_and_deterministic() {
    for rep in ["A3: std", "A4: std + adj", "A3: std + dual(std)"] {
        let first = analyze(rep);
        assert_eq!(first, analyze(rep));
        let reparsed = serde_json::to_string_pretty(&json(&first)).unwrap() + "\n";
        assert_eq!(reparsed, first);
    }
}

#[test]
fn optimized_frame_is_flagged() {
    let dir = TempDir::new().unwrap();
    let out = run(&["--rep", "A3: std + dual(std)", "--cmd", "analyze", "--optimize-frame"], dir.path());
    assert!(out.status.success());
    let v = json(&fs::read_to_string(dir.path().join("report.json")).unwrap());
    assert_eq!(v["frameOptimized"], true);
}

#[test]
fn count_lattice_writes_series_and_fit() {
    let dir = TempDir::new().unwrap();
    let out = run(&["--rep", "A2: std", "--cmd", "count-lattice", "--tmin", "50", "--tmax", "800", "--steps", "12"], dir.path());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = fs::read_to_string(dir.path().join("series.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("experiment,fixture,T,value"));
    assert_eq!(lines.count(), 12);
    let fit = json(&fs::read_to_string(dir.path().join("fit.json")).unwrap());
    assert!((fit["dHat"].as_f64().unwrap() - 2.0).abs() < 0.05);
    assert_eq!(fit["eHat"], 0);
}

#[test]
fn haar_volume_series() {
    let dir = TempDir::new().unwrap();
    let out = run(&["--rep", "A2: std", "--cmd", "haar-volume", "--tmin", "10", "--tmax", "1000", "--steps", "10", "--resolution", "64"], dir.path());
    assert!(out.status.success());
    let csv = fs::read_to_string(dir.path().join("series.csv")).unwrap();
    let rows: Vec<Vec<&str>> = csv.lines().skip(1).map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 10);
    for r in rows {
        assert_eq!((r[0], r[1]), ("haar-volume", "A2: std"));
        let (t, v): (f64, f64) = (r[2].parse().unwrap(), r[3].parse().unwrap());
        let exact = (2.0 * t.ln()).cosh() - 1.0;
        assert!((v - exact).abs() < 1e-6 * exact);
    }
}

#[test]
fn orbit_histogram_csv() {
    let dir = TempDir::new().unwrap();
    let out = run(&["--cmd", "orbit-dist", "--tmax", "100", "--bins", "6"], dir.path());
    assert!(out.status.success());
    let csv = fs::read_to_string(dir.path().join("histogram.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("binCenterRadius,binCenterAngle,empiricalMass,predictedMass"));
    assert_eq!(lines.count(), 36);
}

#[test]
fn verify_passes() {
    let dir = TempDir::new().unwrap();
    let out = run(&["--cmd", "verify"], dir.path());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(out.status.success(), "{stdout}");
    assert!(stdout.lines().all(|l| l.starts_with("PASS ")));
}

#[test]
fn invalid_input_fails_with_named_violation() {
    let dir = TempDir::new().unwrap();
    let out = run(&["--rep", "A3: triv", "--cmd", "analyze"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("span"));
    let out = run(&["--rep", "A3: std +", "--cmd", "analyze"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 9"));
    let out = run(&["--cmd", "analyze"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["--rep", "A3: std", "--cmd", "count-lattice"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}
