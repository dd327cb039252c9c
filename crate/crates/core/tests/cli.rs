use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn inexp(args: &[&str]) -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_inexp"));
    cmd.args(args).env_remove("INEXP_SEED");
    cmd
}

fn run(args: &[&str]) -> Output {
    inexp(args).output().unwrap()
}

fn report(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const CUSP: &str = r#"{"variables": ["x", "y"], "generators": ["x^2 - y^3"], "k": 1}"#;
const CURVE: &str = r#"{"variables": ["x", "y", "z"], "generators": ["x^2 - y*z^3 + z^5", "y^3 - x*z^2"], "k": 2}"#;

#[test]
fn diagram_report_shape() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "cusp.json", CUSP);
    let r = report(&run(&["diagram", s(&f)]));
    assert_eq!(r["result"]["vertices"], serde_json::json!([[2, 0]]));
    assert_eq!(r["result"]["finite_complement"], false);
    assert_eq!(r["result"]["complement_size"], Value::Null);
    assert_eq!(r["seed"], Value::Null);
    assert_eq!(r["command"][0], "diagram");
    assert_eq!(r["input_sha256"].as_str().unwrap().len(), 64);
    assert!(r["timings"]["elapsed_ms"].is_u64());
    assert_eq!(r["version"], env!("CARGO_PKG_VERSION"));
}

#[test]
fn hs_with_oracle_and_csv() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "curve.json", CURVE);
    let csv = dir.path().join("hs.csv");
    let r = report(&run(&["hs", s(&f), "--eta-max", "8", "--oracle", "--csv", s(&csv)]));
    assert_eq!(r["result"]["oracle"]["agrees"], true);
    let values = r["result"]["values"].as_array().unwrap();
    assert_eq!(values.len(), 9);
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("eta,H"));
    assert_eq!(lines.count(), 9);
}

#[test]
fn multiplicity_of_the_cusp() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "cusp.json", CUSP);
    let r = report(&run(&["mult", s(&f)]));
    assert_eq!(r["result"]["consistent"], true);
    assert_eq!(r["result"]["via_hilbert_samuel"], 2);
    assert_eq!(r["seed"], 0);
}

#[test]
fn seed_priority() {
    let dir = TempDir::new().unwrap();
    let plain = write(&dir, "plain.json", CUSP);
    let seeded = write(&dir, "seeded.json", r#"{"variables": ["x", "y"], "generators": ["x^2 - y^3"], "k": 1, "seed": 5}"#);
    let seed_of = |cmd: &mut Command| report(&cmd.output().unwrap())["seed"].clone();
    assert_eq!(seed_of(inexp(&["check-regseq", s(&plain)]).env("INEXP_SEED", "9")), 9);
    assert_eq!(seed_of(inexp(&["check-regseq", s(&seeded)]).env("INEXP_SEED", "9")), 5);
    assert_eq!(seed_of(inexp(&["check-regseq", s(&seeded), "--seed", "3"]).env("INEXP_SEED", "9")), 3);
    assert_eq!(seed_of(&mut inexp(&["check-regseq", s(&plain)])), 0);
}

#[test]
fn bad_seed_variable_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "cusp.json", CUSP);
    let out = inexp(&["check-regseq", s(&f)]).env("INEXP_SEED", "minus one").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("INEXP_SEED"));
}

#[test]
fn input_errors_exit_one() {
    let dir = TempDir::new().unwrap();
    let cases = [
        ("syntax.json", r#"{"variables": ["x"], "generators": ["x +"]}"#),
        ("unknown.json", r#"{"variables": ["x"], "generators": ["y"]}"#),
        ("dup.json", r#"{"variables": ["x", "x"], "generators": ["x"]}"#),
        ("extra.json", r#"{"variables": ["x"], "generators": ["x"], "colour": 1}"#),
        ("zero.json", r#"{"variables": ["x"], "generators": ["x - x"]}"#),
        ("json.json", "not json"),
    ];
    for (name, text) in cases {
        let f = write(&dir, name, text);
        let out = run(&["diagram", s(&f)]);
        assert_eq!(out.status.code(), Some(1), "{name}");
        assert!(out.stdout.is_empty(), "{name}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"), "{name}");
    }
    assert_eq!(run(&["diagram", "/nonexistent/ideal.json"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn missing_k_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "nok.json", r#"{"variables": ["x", "y"], "generators": ["x^2 - y^3"]}"#);
    let out = run(&["mult", s(&f)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(report(&run(&["mult", s(&f), "--k", "1"]))["result"]["consistent"].as_bool().unwrap());
}

#[test]
fn inverted_mu_range_is_rejected() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "cusp.json", CUSP);
    let out = run(&["jet-sweep", s(&f), "--mu-min", "6", "--mu-max", "4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn jet_sweep_csv_and_trials() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "curve.json", CURVE);
    let csv = dir.path().join("sweep.csv");
    let r = report(&run(&["jet-sweep", s(&f), "--mu-min", "3", "--mu-max", "7", "--trials", "3", "--csv", s(&csv)]));
    assert!(r["result"]["sweep"]["falsifications"].as_array().unwrap().is_empty());
    assert_eq!(r["result"]["sweep"]["certified_mu0"], 4);
    assert_eq!(r["result"]["perturbations"]["passed_all"], true);
    assert_eq!(r["result"]["perturbations"]["trials"].as_array().unwrap().len(), 3);
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("mu,stabilized,certified_mu0"));
    assert_eq!(lines.count(), 5);
}

#[test]
fn non_stabilizing_example() {
    let r = report(&run(&["repro", "ex-5-5", "--mu", "5"]));
    assert_eq!(r["result"]["verified"], true);
}

#[test]
fn reports_are_byte_identical_up_to_timing() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "curve.json", CURVE);
    let strip = |out: Output| {
        let mut v = report(&out);
        v["timings"] = Value::Null;
        v.to_string()
    };
    let args = ["jet-sweep", s(&f), "--mu-min", "3", "--mu-max", "6", "--trials", "4", "--seed", "11"];
    let one = strip(run(&[&["--threads", "1"], &args[..]].concat()));
    let four = strip(run(&[&["--threads", "4"], &args[..]].concat()));
    let again = strip(run(&[&["--threads", "4"], &args[..]].concat()));
    assert_eq!(four, again);
    let drop_command = |s: &str| {
        let mut v: Value = serde_json::from_str(s).unwrap();
        v["command"] = Value::Null;
        v
    };
    assert_eq!(drop_command(&one), drop_command(&four));
}

#[test]
fn input_digest_is_of_the_file_bytes() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.json", CUSP);
    let b = write(&dir, "b.json", &format!("{CUSP}\n"));
    let digest = |p: &Path| report(&run(&["diagram", s(p)]))["input_sha256"].clone();
    assert_ne!(digest(&a), digest(&b));
    assert_eq!(digest(&a), digest(&a));
}
