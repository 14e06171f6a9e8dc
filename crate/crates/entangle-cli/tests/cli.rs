//! End-to-end tests of the `entangle` binary: every subcommand, the chain
//! file and spec round-trips, the exit-code contract, and determinism of the
//! reproduction tree.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_entangle"))
}

fn tmp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("entangle-cli-{tag}-{}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn run_ok(cmd: &mut Command) -> Output {
    let out = cmd.output().unwrap();
    assert!(
        out.status.success(),
        "command failed ({:?}): {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    out
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn gen_then_measure_fixed_square_is_flat() {
    let dir = tmp_dir("square");
    run_ok(bin().args(["gen", "--model", "fixed_square", "--out"]).arg(&dir));
    let out = run_ok(bin().arg("measure").arg(dir.join("chain_000.txt")));
    let doc = stdout_json(&out);
    let c = &doc["chains"][0];
    assert_eq!(c["closed"], serde_json::json!(true));
    assert_eq!(c["edges"], serde_json::json!(4));
    assert_eq!(c["writhe"], serde_json::json!(0.0));
    assert_eq!(c["torsion"], serde_json::json!(0.0));
    assert_eq!(c["self_linking"], serde_json::json!(0.0));
    assert_eq!(c["acn"], serde_json::json!(0.0));
}

#[test]
fn gen_is_deterministic_per_seed() {
    let d1 = tmp_dir("gen1");
    let d2 = tmp_dir("gen2");
    let d3 = tmp_dir("gen3");
    let args = ["gen", "--model", "uniform_polygon", "--n", "12", "--count", "3"];
    run_ok(bin().args(args).args(["--seed", "7", "--out"]).arg(&d1));
    run_ok(bin().args(args).args(["--seed", "7", "--out"]).arg(&d2));
    run_ok(bin().args(args).args(["--seed", "8", "--out"]).arg(&d3));
    for i in 0..3 {
        let name = format!("chain_{i:03}.txt");
        let c1 = fs::read(d1.join(&name)).unwrap();
        let c2 = fs::read(d2.join(&name)).unwrap();
        let c3 = fs::read(d3.join(&name)).unwrap();
        assert_eq!(c1, c2, "same seed must give identical files");
        assert_ne!(c1, c3, "different seed must give different chains");
    }
    // The manifest records what is needed to regenerate the files.
    let manifest: serde_json::Value =
        serde_json::from_slice(&fs::read(d1.join("manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["seed"], serde_json::json!(7));
    assert_eq!(manifest["model"], serde_json::json!("uniform_polygon"));
}

#[test]
fn seed_env_var_is_the_fallback() {
    let d1 = tmp_dir("env1");
    let d2 = tmp_dir("env2");
    let args = ["gen", "--model", "uniform_walk", "--n", "9"];
    run_ok(bin().args(args).env("ENTANGLE_SEED", "123").args(["--out"]).arg(&d1));
    run_ok(bin().args(args).args(["--seed", "123", "--out"]).arg(&d2));
    assert_eq!(
        fs::read(d1.join("chain_000.txt")).unwrap(),
        fs::read(d2.join("chain_000.txt")).unwrap()
    );
}

#[test]
fn measure_two_files_reports_linking() {
    let dir = tmp_dir("pair");
    run_ok(
        bin()
            .args(["gen", "--model", "uniform_walk", "--n", "10", "--count", "2", "--seed", "5"])
            .args(["--out"])
            .arg(&dir),
    );
    let out = run_ok(
        bin()
            .arg("measure")
            .arg(dir.join("chain_000.txt"))
            .arg(dir.join("chain_001.txt")),
    );
    let doc = stdout_json(&out);
    assert!(doc["linking"].is_number());
    assert_eq!(doc["chains"].as_array().unwrap().len(), 2);
}

#[test]
fn experiment_spec_file_round_trip() {
    let dir = tmp_dir("exp");
    let prefix = dir.join("run");
    let out = run_ok(bin().args([
        "experiment",
        "--model",
        "uniform_polygon",
        "--statistic",
        "mean_squared",
        "--measure",
        "writhe",
        "--lengths",
        "10,20",
        "--samples",
        "20",
        "--subcollections",
        "4",
        "--seed",
        "11",
        "--out",
        prefix.to_str().unwrap(),
    ]));
    assert!(out.status.success());
    let csv1 = fs::read(prefix.with_extension("csv")).unwrap();

    // Feeding the emitted spec back reproduces the table byte for byte.
    let out2 = run_ok(bin().args([
        "experiment",
        "--spec",
        prefix.with_extension("spec").to_str().unwrap(),
    ]));
    assert_eq!(out2.stdout, csv1);

    // The protocol sample counts are carried in the metadata.
    let doc: serde_json::Value =
        serde_json::from_slice(&fs::read(prefix.with_extension("json")).unwrap()).unwrap();
    assert_eq!(doc["series"][0]["spec"]["samples_per_subcollection"], serde_json::json!(20));
    assert_eq!(doc["series"][0]["spec"]["subcollections"], serde_json::json!(4));
    assert_eq!(doc["seed"], serde_json::json!(11));
    let row_samples = doc["series"][0]["table"]["rows"][0]["samples"].as_u64().unwrap();
    assert_eq!(row_samples, 80);
}

#[test]
fn experiment_csv_feeds_fit() {
    let dir = tmp_dir("fit");
    let csv_path = dir.join("table.csv");
    let out = run_ok(bin().args([
        "experiment",
        "--model",
        "uniform_polygon",
        "--statistic",
        "mean_squared",
        "--measure",
        "writhe",
        "--lengths",
        "10,20,30,40",
        "--samples",
        "50",
        "--subcollections",
        "5",
        "--seed",
        "3",
    ]));
    fs::write(&csv_path, &out.stdout).unwrap();
    let fit_out = run_ok(bin().args([
        "fit",
        "--model",
        "a_plus_b_n2",
        "--input",
        csv_path.to_str().unwrap(),
    ]));
    let text = String::from_utf8(fit_out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "series,model,a,stderr_a,b,stderr_b,r2");
    let fields: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(fields[1], "a_plus_b_n2");
    let b: f64 = fields[4].parse().unwrap();
    assert!(b > 0.0, "quadratic coefficient should be positive, got {b}");
}

#[test]
fn reproduce_desk_twice_is_byte_identical() {
    let d1 = tmp_dir("rep1");
    let d2 = tmp_dir("rep2");
    for d in [&d1, &d2] {
        run_ok(bin().args(["reproduce", "--scale", "desk", "--seed", "42", "--out"]).arg(d));
    }
    // Every CSV in the tree must match byte for byte.
    let csvs = |dir: &Path| {
        let mut v = vec![dir.join("tables.csv"), dir.join("fits.csv")];
        let mut series: Vec<_> = fs::read_dir(dir.join("series"))
            .unwrap()
            .map(|e| e.unwrap().path())
            .collect();
        series.sort();
        v.extend(series);
        v
    };
    let (f1, f2) = (csvs(&d1), csvs(&d2));
    assert_eq!(f1.len(), f2.len());
    assert_eq!(f1.len(), 2 + 18, "expected 18 series files plus the two summaries");
    for (a, b) in f1.iter().zip(&f2) {
        assert_eq!(a.file_name(), b.file_name());
        assert_eq!(
            fs::read(a).unwrap(),
            fs::read(b).unwrap(),
            "{} differs between runs",
            a.display()
        );
    }
    assert!(d1.join("results.json").exists());
    assert!(d1.join("plot.gp").exists());
}

#[test]
fn usage_errors_exit_one() {
    // Unknown subcommand.
    let out = bin().arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    // Unknown model.
    let dir = tmp_dir("usage");
    let out = bin()
        .args(["gen", "--model", "nonsense", "--out"])
        .arg(&dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    // Too few edges for a polygon.
    let out = bin()
        .args(["gen", "--model", "uniform_polygon", "--n", "2", "--out"])
        .arg(&dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    // Missing chain file.
    let out = bin().args(["measure", "/no/such/file.txt"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    // Linking without a partner is an invalid spec.
    let out = bin()
        .args([
            "experiment",
            "--model",
            "uniform_walk",
            "--statistic",
            "mean_abs",
            "--measure",
            "linking",
            "--lengths",
            "10",
            "--samples",
            "5",
            "--subcollections",
            "2",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn degenerate_geometry_exits_two() {
    // Edges 0 and 2 of this open chain intersect exactly.
    let dir = tmp_dir("degen");
    let path = dir.join("bad.txt");
    fs::write(
        &path,
        "# chain closed=false n=4\n0 0 0\n1 0 0\n0.5 -0.5 0\n0.5 0.5 0\n0.2 0.7 0.4\n",
    )
    .unwrap();
    let out = bin().arg("measure").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    let out = bin().arg("--help").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for sub in ["gen", "measure", "experiment", "fit", "reproduce", "verify"] {
        assert!(text.contains(sub), "help lists {sub}");
    }
}

#[test]
fn verify_passes_at_small_scale() {
    let out = run_ok(bin().args([
        "verify",
        "--pairs",
        "40",
        "--ndirs",
        "20000",
        "--moment-samples",
        "20000",
        "--seed",
        "42",
    ]));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("all verification checks passed"), "{text}");
    assert!(!text.contains("[FAIL]"));
}
