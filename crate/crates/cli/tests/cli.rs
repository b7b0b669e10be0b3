use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use sfft_dt::format::{encode_signal, parse_spectrum_json};
use sfft_dt::lab::{gen_exact, ExactSparseSpec, ValueDistribution};
use sfft_dt::spectral::synthesize_dense;
use sfft_dt::{Complex64, ComplexSignal, SparseSpectrum};
use tempfile::TempDir;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_sfft-dt"));
    cmd.env_remove("SFFT_DT_THREADS");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn write_signal(dir: &Path, name: &str, x: &ComplexSignal) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, encode_signal(x)).unwrap();
    path
}

fn single_tone(n: usize, s: usize, value: Complex64) -> ComplexSignal {
    let spec = SparseSpectrum::from_pairs(n, [(s, value)]).unwrap();
    ComplexSignal::from_spectrum(&spec).unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn single_tone_gives_one_entry() {
    let dir = TempDir::new().unwrap();
    let input = write_signal(dir.path(), "tone.bin", &single_tone(16, 5, Complex64::new(2.0, 0.0)));
    let out = run(&["transform-exact", input.to_str().unwrap(), "--k", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let got = parse_spectrum_json(&stdout(&out), 16).unwrap();
    assert_eq!(got.nnz(), 1);
    let v = got.get(5).unwrap();
    assert!((v - Complex64::new(2.0, 0.0)).norm() < 1e-12);
}

#[test]
fn zero_signal_gives_empty_array() {
    let dir = TempDir::new().unwrap();
    let input = write_signal(dir.path(), "zero.bin", &ComplexSignal::zeros(64).unwrap());
    let out = run(&["transform-exact", input.to_str().unwrap(), "--k", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed, serde_json::json!([]));
}

#[test]
fn truncated_file_fails_with_diagnostic() {
    let dir = TempDir::new().unwrap();
    let bytes = encode_signal(&single_tone(32, 3, Complex64::new(1.0, 0.0)));
    let path = dir.path().join("cut.bin");
    std::fs::write(&path, &bytes[..bytes.len() - 5]).unwrap();
    let out = run(&["transform-exact", path.to_str().unwrap(), "--k", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("malformed signal file"), "{err}");
}

#[test]
fn unresolved_bins_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let n = 16;
    let dense: Vec<Complex64> = (0..n).map(|i| Complex64::new(1.0 + i as f64, 0.5)).collect();
    let x = ComplexSignal::new(synthesize_dense(&dense).unwrap()).unwrap();
    let input = write_signal(dir.path(), "dense.bin", &x);
    let trace = dir.path().join("trace.json");
    let out = run(&[
        "transform-exact",
        input.to_str().unwrap(),
        "--d",
        "4",
        "--a-max",
        "1",
        "--non-iterative",
        "--trace",
        trace.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let trace: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(trace).unwrap()).unwrap();
    assert_eq!(trace["unresolved_bins"].as_array().unwrap().len(), 4);
}

#[test]
fn invalid_overrides_are_rejected() {
    let dir = TempDir::new().unwrap();
    let input = write_signal(dir.path(), "tone.bin", &single_tone(64, 9, Complex64::new(1.0, 0.0)));
    let path = input.to_str().unwrap();
    for args in [
        vec!["transform-exact", path, "--k", "1", "--a-max", "5"],
        vec!["transform-exact", path, "--k", "1", "--mu", "3"],
        vec!["transform-exact", path, "--k", "1", "--n", "128"],
        vec!["transform-exact", path, "--d", "3"],
        vec!["transform-exact", path],
        vec!["transform-general", path, "--k", "1", "--d", "5"],
        vec!["--threads", "0", "transform-exact", path, "--k", "1"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn round_trip_reproduces_input() {
    let dir = TempDir::new().unwrap();
    let n = 1 << 12;
    let (x, truth) = gen_exact(&ExactSparseSpec {
        n,
        k: 40,
        values: ValueDistribution::ComplexGaussian,
        seed: 11,
    })
    .unwrap();
    let input = write_signal(dir.path(), "x.bin", &x);
    let spec_path = dir.path().join("out.json");
    let out = run(&[
        "transform-exact",
        input.to_str().unwrap(),
        "--k",
        "40",
        "--out",
        spec_path.to_str().unwrap(),
        "--trace",
        dir.path().join("t.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let got = parse_spectrum_json(&std::fs::read_to_string(&spec_path).unwrap(), n).unwrap();
    assert_eq!(got.nnz(), truth.nnz());
    let back = ComplexSignal::from_spectrum(&got).unwrap();
    let scale = x.samples().iter().map(|v| v.norm()).fold(0.0, f64::max);
    for (a, b) in back.samples().iter().zip(x.samples()) {
        assert!((a - b).norm() <= 1e-7 * scale);
    }
}

#[test]
fn generate_then_estimate_k() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("k32.bin");
    let gen = run(&[
        "generate",
        "exact",
        "--n",
        "16384",
        "--k",
        "32",
        "--seed",
        "5",
        "--out",
        input.to_str().unwrap(),
    ]);
    assert_eq!(gen.status.code(), Some(0));
    let out = run(&["estimate-k", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let summary: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(summary["k_hat"], 32);
    assert_eq!(summary["dense_fallback"], false);
}

#[test]
fn bench_writes_one_row_per_cell_and_trial() {
    let out = run(&["bench", "--grid", "exact-small", "--trials", "3", "--seed", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("cell,n,k,d,method"));
    // Two lengths times three sparsities, three trials each.
    assert_eq!(lines.count(), 2 * 3 * 3);
}

#[test]
fn bench_json_summarizes_cells() {
    let out = run(&["bench", "--grid", "exact-small", "--trials", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let summary: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let cells = summary["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 6);
    assert!(cells.iter().all(|c| c["seeds"].as_array().unwrap().len() == 2));
}

#[test]
fn census_csv_rows_sum_to_one() {
    let out = run(&["census", "--n", "4096", "--k", "64", "--mu", "2,4", "--trials", "20"]);
    assert_eq!(out.status.code(), Some(0));
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    let rows: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
    for mu_d in ["32", "16"] {
        let total: f64 = rows
            .iter()
            .filter(|r| &r[2] == mu_d)
            .map(|r| r[7].parse::<f64>().unwrap())
            .sum();
        assert!((total - 1.0).abs() < 1e-12, "d = {mu_d}: {total}");
    }
}

#[test]
fn general_transform_is_deterministic_under_seed() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("m.bin");
    let gen = run(&[
        "generate",
        "mixture",
        "--n",
        "8192",
        "--k",
        "32",
        "--snr-db",
        "20",
        "--seed",
        "2",
        "--out",
        input.to_str().unwrap(),
    ]);
    assert_eq!(gen.status.code(), Some(0));
    let path = input.to_str().unwrap();
    let args = ["transform-general", path, "--k", "32", "--seed", "9", "--snr"];
    let a = run(&args);
    let b = bin().args(args).env("SFFT_DT_THREADS", "1").output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stderr, b.stderr);
    let summary: serde_json::Value = serde_json::from_str(&String::from_utf8(a.stderr).unwrap()).unwrap();
    assert!(summary["snr_db"].as_f64().unwrap() > 15.0);
    assert_eq!(summary["estimated_collisions"], 32);
}

#[test]
fn general_csv_output_has_header() {
    let dir = TempDir::new().unwrap();
    let input = write_signal(
        dir.path(),
        "tone.bin",
        &single_tone(4096, 100, Complex64::new(0.0, 3.0)),
    );
    let out = run(&[
        "transform-general",
        input.to_str().unwrap(),
        "--k",
        "1",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("index,re,im"));
    let row: Vec<f64> = lines.next().unwrap().split(',').map(|v| v.parse().unwrap()).collect();
    assert_eq!(row[0], 100.0);
    assert!(row[1].abs() < 1e-9 && (row[2] - 3.0).abs() < 1e-9);
}
