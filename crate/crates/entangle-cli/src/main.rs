//! Command-line front end: generate chains, measure chain files, run
//! Monte Carlo experiments, fit scaling models, reproduce the full series
//! catalogue, and verify the exact kernel against the slow oracles.
//!
//! Exit codes: 0 success, 1 usage error, 2 numerical or degeneracy failure.

use std::fs;
use std::io::BufReader;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use entangle::chains::{self, Chain, ChainModel, RngStream, StreamKey};
use entangle::ensemble::{
    self, fit_csv, reproduce_all, run_experiment, stat_csv, EnsembleSpec, PartnerCurve, RunDocument,
    Scale, SeriesResult, Statistic,
};
use entangle::fitting::{fit_table, FitModel};
use entangle::geometry::{seg_pair_linking, segment_min_distance, Direction, Segment, Vec3};
use entangle::measures::{self, MeasureKind};
use entangle::oracle::{linking_by_projection, seg_pair_quadrature, writhe_by_projection};

const DEFAULT_SEED: u64 = 42;

#[derive(Parser)]
#[command(
    name = "entangle",
    about = "Entanglement measures and Monte Carlo scaling experiments for polygonal chains",
    version
)]
struct Cli {
    /// Worker threads for parallel experiment sections (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate random chains and write them as chain files.
    Gen(GenArgs),
    /// Compute the measures of one chain file, or of a pair (adds linking).
    Measure(MeasureArgs),
    /// Run one Monte Carlo experiment and emit its statistics table.
    Experiment(ExperimentArgs),
    /// Fit a scaling model to a statistics CSV.
    Fit(FitArgs),
    /// Run the whole series catalogue and write a results tree.
    Reproduce(ReproduceArgs),
    /// Cross-check the exact kernel against the slow oracles.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct GenArgs {
    /// uniform_walk | uniform_polygon | equilateral_walk | fixed_square | fixed_trefoil
    #[arg(long)]
    model: String,
    /// Edge count (ignored by fixed curves).
    #[arg(long, default_value_t = 10)]
    n: usize,
    /// Number of chains to generate.
    #[arg(long, default_value_t = 1)]
    count: usize,
    /// Stream seed; falls back to ENTANGLE_SEED, then 42.
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory for chain_###.txt files and the manifest.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct MeasureArgs {
    /// Chain file(s); with two files the pair linking number is included.
    #[arg(required = true, num_args = 1..=2)]
    files: Vec<PathBuf>,
}

#[derive(Args)]
struct ExperimentArgs {
    /// key=value spec file; command-line flags override its fields.
    #[arg(long)]
    spec: Option<PathBuf>,
    #[arg(long)]
    model: Option<String>,
    #[arg(long)]
    second_model: Option<String>,
    /// none | square | trefoil
    #[arg(long)]
    partner: Option<String>,
    /// mean | mean_squared | mean_abs
    #[arg(long)]
    statistic: Option<String>,
    /// writhe | linking | torsion | self_linking | acn
    #[arg(long)]
    measure: Option<String>,
    /// Comma-separated ascending edge counts, e.g. 10,20,30.
    #[arg(long)]
    lengths: Option<String>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    subcollections: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Output prefix; writes PREFIX.csv, PREFIX.json and PREFIX.spec.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FitArgs {
    /// a_plus_b_n | a_plus_b_n2 | a_plus_b_sqrt_n
    #[arg(long)]
    model: String,
    /// Statistics CSV (as produced by `experiment` or `reproduce`).
    #[arg(long)]
    input: PathBuf,
    /// Series to fit when the CSV holds several (default: the first).
    #[arg(long)]
    series: Option<String>,
}

#[derive(Args)]
struct ReproduceArgs {
    /// desk | paper
    #[arg(long, default_value = "desk")]
    scale: String,
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory for the results tree.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// Projection directions for the oracle comparisons.
    #[arg(long, default_value_t = 100_000)]
    ndirs: usize,
    /// Random segment pairs for the quadrature comparison.
    #[arg(long, default_value_t = 200)]
    pairs: usize,
    /// Draws per edge-configuration for the crossing moments.
    #[arg(long, default_value_t = 100_000)]
    moment_samples: usize,
    #[arg(long)]
    seed: Option<u64>,
}

enum CliError {
    Usage(String),
    Numeric(String),
}

impl CliError {
    fn usage(e: impl std::fmt::Display) -> Self {
        CliError::Usage(e.to_string())
    }
    fn numeric(e: impl std::fmt::Display) -> Self {
        CliError::Numeric(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version are successful exits.
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(1);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };

    if let Some(k) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .ok();
    }

    let result = match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Measure(args) => cmd_measure(args),
        Command::Experiment(args) => cmd_experiment(args),
        Command::Fit(args) => cmd_fit(args),
        Command::Reproduce(args) => cmd_reproduce(args),
        Command::Verify(args) => cmd_verify(args),
    };

    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Numeric(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn resolve_seed(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("ENTANGLE_SEED")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(DEFAULT_SEED)
}

fn parse_model(s: &str) -> Result<ChainModel, CliError> {
    ChainModel::parse(s).ok_or_else(|| CliError::usage(format!("unknown chain model: {s}")))
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

fn cmd_gen(args: GenArgs) -> Result<(), CliError> {
    let model = parse_model(&args.model)?;
    let seed = resolve_seed(args.seed);
    let spec = entangle::ChainSpec::new(model, args.n).map_err(CliError::usage)?;
    fs::create_dir_all(&args.out).map_err(CliError::usage)?;
    let stream = RngStream::new(seed);
    let experiment = chains::fnv1a64(format!("gen/{}", model.name()).as_bytes());
    let mut files = Vec::new();
    for i in 0..args.count {
        let mut rng = stream.rng(StreamKey::new(experiment, 0, i as u64));
        let chain = spec.generate(&mut rng);
        let name = format!("chain_{i:03}.txt");
        let mut buf = Vec::new();
        chains::write_chain(&chain, &mut buf).map_err(CliError::usage)?;
        fs::write(args.out.join(&name), buf).map_err(CliError::usage)?;
        files.push(name);
    }
    let manifest = serde_json::json!({
        "model": model.name(),
        "n": args.n,
        "count": args.count,
        "seed": seed,
        "files": files,
    });
    fs::write(
        args.out.join("manifest.json"),
        serde_json::to_string_pretty(&manifest).map_err(CliError::usage)?,
    )
    .map_err(CliError::usage)?;
    println!("wrote {} chain file(s) to {}", args.count, args.out.display());
    Ok(())
}

// ---------------------------------------------------------------------------
// measure
// ---------------------------------------------------------------------------

fn load_chain(path: &Path) -> Result<Chain, CliError> {
    let file = fs::File::open(path)
        .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    chains::read_chain(BufReader::new(file))
        .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

fn chain_report(path: &Path, c: &Chain) -> Result<serde_json::Value, CliError> {
    let wr = measures::writhe(c).map_err(CliError::numeric)?;
    let tau = measures::total_torsion(c);
    let acn = measures::acn(c).map_err(CliError::numeric)?;
    Ok(serde_json::json!({
        "file": path.display().to_string(),
        "closed": c.is_closed(),
        "edges": c.edge_count(),
        "writhe": wr,
        "torsion": tau,
        "self_linking": wr + tau / std::f64::consts::TAU,
        "acn": acn,
    }))
}

fn cmd_measure(args: MeasureArgs) -> Result<(), CliError> {
    let chains: Vec<Chain> = args
        .files
        .iter()
        .map(|p| load_chain(p))
        .collect::<Result<_, _>>()?;
    let mut doc = serde_json::json!({
        "chains": args
            .files
            .iter()
            .zip(&chains)
            .map(|(p, c)| chain_report(p, c))
            .collect::<Result<Vec<_>, _>>()?,
    });
    if let [a, b] = chains.as_slice() {
        let lk = measures::linking_number(a, b).map_err(CliError::numeric)?;
        doc["linking"] = serde_json::json!(lk);
    }
    println!("{}", serde_json::to_string_pretty(&doc).map_err(CliError::usage)?);
    Ok(())
}

// ---------------------------------------------------------------------------
// experiment
// ---------------------------------------------------------------------------

fn parse_lengths(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| CliError::usage(format!("bad length: {x}")))
        })
        .collect()
}

/// The flat key=value spec format. Unknown keys are rejected.
fn parse_spec_file(path: &Path) -> Result<EnsembleSpec, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    let mut spec = EnsembleSpec {
        model: ChainModel::UniformPolygon,
        second_model: None,
        partner: PartnerCurve::None,
        statistic: Statistic::Mean,
        measure: MeasureKind::Writhe,
        lengths: vec![],
        samples_per_subcollection: 0,
        subcollections: 0,
        seed: DEFAULT_SEED,
    };
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| CliError::usage(format!("line {}: expected key=value", lineno + 1)))?;
        let (key, value) = (key.trim(), value.trim());
        let bad = |what: &str| CliError::usage(format!("line {}: bad {what}: {value}", lineno + 1));
        match key {
            "model" => spec.model = ChainModel::parse(value).ok_or_else(|| bad("model"))?,
            "second_model" => {
                spec.second_model = if value.is_empty() || value == "none" {
                    None
                } else {
                    Some(ChainModel::parse(value).ok_or_else(|| bad("second_model"))?)
                }
            }
            "partner" => spec.partner = PartnerCurve::parse(value).ok_or_else(|| bad("partner"))?,
            "statistic" => {
                spec.statistic = Statistic::parse(value).ok_or_else(|| bad("statistic"))?
            }
            "measure" => spec.measure = MeasureKind::parse(value).ok_or_else(|| bad("measure"))?,
            "lengths" => spec.lengths = parse_lengths(value)?,
            "samples" => {
                spec.samples_per_subcollection = value.parse().map_err(|_| bad("samples"))?
            }
            "subcollections" => {
                spec.subcollections = value.parse().map_err(|_| bad("subcollections"))?
            }
            "seed" => spec.seed = value.parse().map_err(|_| bad("seed"))?,
            other => {
                return Err(CliError::usage(format!(
                    "line {}: unknown spec key: {other}",
                    lineno + 1
                )))
            }
        }
    }
    Ok(spec)
}

fn format_spec_file(spec: &EnsembleSpec) -> String {
    let lengths = spec
        .lengths
        .iter()
        .map(|n| n.to_string())
        .collect::<Vec<_>>()
        .join(",");
    format!(
        "model={}\nsecond_model={}\npartner={}\nstatistic={}\nmeasure={}\nlengths={}\nsamples={}\nsubcollections={}\nseed={}\n",
        spec.model.name(),
        spec.second_model.map(|m| m.name()).unwrap_or("none"),
        spec.partner.name(),
        spec.statistic.name(),
        spec.measure.name(),
        lengths,
        spec.samples_per_subcollection,
        spec.subcollections,
        spec.seed,
    )
}

fn cmd_experiment(args: ExperimentArgs) -> Result<(), CliError> {
    let mut spec = match &args.spec {
        Some(path) => parse_spec_file(path)?,
        None => EnsembleSpec {
            model: ChainModel::UniformPolygon,
            second_model: None,
            partner: PartnerCurve::None,
            statistic: Statistic::Mean,
            measure: MeasureKind::Writhe,
            lengths: vec![],
            samples_per_subcollection: 500,
            subcollections: 10,
            seed: resolve_seed(None),
        },
    };
    // Flags override the file.
    if let Some(m) = &args.model {
        spec.model = parse_model(m)?;
    }
    if let Some(m) = &args.second_model {
        spec.second_model = if m == "none" { None } else { Some(parse_model(m)?) };
    }
    if let Some(p) = &args.partner {
        spec.partner =
            PartnerCurve::parse(p).ok_or_else(|| CliError::usage(format!("unknown partner: {p}")))?;
    }
    if let Some(s) = &args.statistic {
        spec.statistic =
            Statistic::parse(s).ok_or_else(|| CliError::usage(format!("unknown statistic: {s}")))?;
    }
    if let Some(m) = &args.measure {
        spec.measure =
            MeasureKind::parse(m).ok_or_else(|| CliError::usage(format!("unknown measure: {m}")))?;
    }
    if let Some(l) = &args.lengths {
        spec.lengths = parse_lengths(l)?;
    }
    if let Some(s) = args.samples {
        spec.samples_per_subcollection = s;
    }
    if let Some(s) = args.subcollections {
        spec.subcollections = s;
    }
    if let Some(s) = args.seed {
        spec.seed = s;
    }
    if spec.lengths.is_empty() {
        return Err(CliError::usage(
            "no lengths given (use --lengths or a spec file)".to_string(),
        ));
    }
    spec.validate().map_err(CliError::usage)?;

    let table = run_experiment(&spec).map_err(CliError::numeric)?;
    let csv = stat_csv(&[&table]);
    match &args.out {
        None => print!("{csv}"),
        Some(prefix) => {
            let series = vec![SeriesResult {
                name: table.series.clone(),
                spec: spec.clone(),
                table: table.clone(),
                fit_model: FitModel::APlusBN,
                fit: None,
            }];
            let doc = RunDocument::new(spec.seed, None, series);
            write_with_ext(prefix, "csv", csv.as_bytes())?;
            write_with_ext(
                prefix,
                "json",
                serde_json::to_string_pretty(&doc)
                    .map_err(CliError::usage)?
                    .as_bytes(),
            )?;
            write_with_ext(prefix, "spec", format_spec_file(&spec).as_bytes())?;
            println!(
                "wrote {0}.csv, {0}.json, {0}.spec",
                prefix.display()
            );
        }
    }
    Ok(())
}

fn write_with_ext(prefix: &Path, ext: &str, bytes: &[u8]) -> Result<(), CliError> {
    if let Some(dir) = prefix.parent() {
        if !dir.as_os_str().is_empty() {
            fs::create_dir_all(dir).map_err(CliError::usage)?;
        }
    }
    fs::write(prefix.with_extension(ext), bytes).map_err(CliError::usage)
}

// ---------------------------------------------------------------------------
// fit
// ---------------------------------------------------------------------------

fn cmd_fit(args: FitArgs) -> Result<(), CliError> {
    let model = FitModel::parse(&args.model)
        .ok_or_else(|| CliError::usage(format!("unknown fit model: {}", args.model)))?;
    let text = fs::read_to_string(&args.input)
        .map_err(|e| CliError::usage(format!("{}: {e}", args.input.display())))?;
    let tables = ensemble::parse_stat_csv(&text).map_err(CliError::usage)?;
    let table = match &args.series {
        Some(name) => tables
            .iter()
            .find(|t| &t.series == name)
            .ok_or_else(|| CliError::usage(format!("series not found: {name}")))?,
        None => tables
            .first()
            .ok_or_else(|| CliError::usage("CSV holds no data rows".to_string()))?,
    };
    let fit = fit_table(table, model).map_err(CliError::numeric)?;
    print!("{}", fit_csv(&[(table.series.clone(), model, fit)]));
    Ok(())
}

// ---------------------------------------------------------------------------
// reproduce
// ---------------------------------------------------------------------------

fn cmd_reproduce(args: ReproduceArgs) -> Result<(), CliError> {
    let scale = Scale::parse(&args.scale)
        .ok_or_else(|| CliError::usage(format!("unknown scale: {}", args.scale)))?;
    let seed = resolve_seed(args.seed);
    let result = reproduce_all(scale, seed).map_err(CliError::numeric)?;

    let dir = &args.out;
    let series_dir = dir.join("series");
    fs::create_dir_all(&series_dir).map_err(CliError::usage)?;

    let mut fits = Vec::new();
    for s in &result.series {
        fs::write(
            series_dir.join(format!("{}.csv", s.name)),
            stat_csv(&[&s.table]),
        )
        .map_err(CliError::usage)?;
        if let Some(f) = s.fit {
            fits.push((s.name.clone(), s.fit_model, f));
        }
    }
    let tables: Vec<&ensemble::StatTable> = result.series.iter().map(|s| &s.table).collect();
    fs::write(dir.join("tables.csv"), stat_csv(&tables)).map_err(CliError::usage)?;
    fs::write(dir.join("fits.csv"), fit_csv(&fits)).map_err(CliError::usage)?;

    let doc = RunDocument::new(seed, Some(scale.name().to_string()), result.series.clone());
    fs::write(
        dir.join("results.json"),
        serde_json::to_string_pretty(&doc).map_err(CliError::usage)?,
    )
    .map_err(CliError::usage)?;
    fs::write(dir.join("plot.gp"), gnuplot_script(&result.series)).map_err(CliError::usage)?;

    println!(
        "wrote {} series to {} (seed {seed}, scale {})",
        result.series.len(),
        dir.display(),
        scale.name()
    );
    Ok(())
}

fn gnuplot_script(series: &[SeriesResult]) -> String {
    let mut s = String::new();
    s.push_str("# gnuplot script for the reproduction series\n");
    s.push_str("set datafile separator ','\n");
    s.push_str("set key left top\n");
    s.push_str("set xlabel 'n (edges)'\n\n");
    for sr in series {
        let curve = match sr.fit {
            Some(f) => {
                let g = match sr.fit_model {
                    FitModel::APlusBN => "x",
                    FitModel::APlusBN2 => "x*x",
                    FitModel::APlusBSqrtN => "sqrt(x)",
                };
                format!(", {} + {} * {g} title 'fit'", f.a, f.b)
            }
            None => String::new(),
        };
        s.push_str(&format!(
            "set title '{name}'\nplot 'series/{name}.csv' every ::1 using 2:3:4 with yerrorbars title 'data'{curve}\npause -1\n\n",
            name = sr.name,
        ));
    }
    s
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct Verifier {
    failures: usize,
}

impl Verifier {
    fn check(&mut self, name: &str, ok: bool, detail: String) {
        println!("[{}] {name}: {detail}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            self.failures += 1;
        }
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    let seed = resolve_seed(args.seed);
    let stream = RngStream::new(seed);
    let mut v = Verifier { failures: 0 };

    // Exact kernel against brute-force quadrature on random generic pairs.
    {
        use rand::Rng;
        let mut rng = stream.rng(StreamKey::new(chains::fnv1a64(b"verify/quadrature"), 0, 0));
        let mut max_err: f64 = 0.0;
        let mut count = 0;
        while count < args.pairs {
            let mut p = || Vec3::new(rng.random::<f64>(), rng.random::<f64>(), rng.random::<f64>());
            let (a0, a1, b0, b1) = (p(), p(), p(), p());
            let (Ok(a), Ok(b)) = (Segment::new(a0, a1), Segment::new(b0, b1)) else {
                continue;
            };
            if segment_min_distance(&a, &b) < 0.02 {
                continue;
            }
            count += 1;
            let exact = seg_pair_linking(&a, &b).map_err(CliError::numeric)?;
            let quad = seg_pair_quadrature(&a, &b, 1e-9).map_err(CliError::numeric)?;
            max_err = max_err.max((exact - quad).abs());
        }
        v.check(
            "segment pair vs quadrature",
            max_err < 1e-8,
            format!("max |Δ| = {max_err:.2e} over {count} pairs (tol 1e-8)"),
        );
    }

    // Writhe of the fixed trefoil against the projection oracle.
    {
        let trefoil = chains::fixed_trefoil();
        let exact = measures::writhe(&trefoil).map_err(CliError::numeric)?;
        let mut rng = stream.rng(StreamKey::new(chains::fnv1a64(b"verify/writhe"), 0, 0));
        let est = writhe_by_projection(&trefoil, args.ndirs, &mut rng);
        let z = (est.value - exact) / est.stderr;
        v.check(
            "trefoil writhe vs projection",
            z.abs() < 3.0,
            format!(
                "exact {exact:.6}, sampled {:.6} ± {:.6} (z = {z:.2})",
                est.value, est.stderr
            ),
        );
    }

    // Hopf pair linking by projection.
    {
        let a = Chain::new(
            vec![
                Vec3::new(0.0, -1.0, -1.0),
                Vec3::new(0.0, 1.0, -1.0),
                Vec3::new(0.0, 1.0, 1.0),
                Vec3::new(0.0, -1.0, 1.0),
            ],
            true,
        )
        .map_err(CliError::usage)?;
        let b = Chain::new(
            vec![
                Vec3::new(-1.0, 0.0, 0.0),
                Vec3::new(1.0, 0.0, 0.0),
                Vec3::new(1.0, 2.0, 0.0),
                Vec3::new(-1.0, 2.0, 0.0),
            ],
            true,
        )
        .map_err(CliError::usage)?;
        let exact = measures::linking_number(&a, &b).map_err(CliError::numeric)?;
        let mut rng = stream.rng(StreamKey::new(chains::fnv1a64(b"verify/hopf"), 0, 0));
        let est = linking_by_projection(&a, &b, args.ndirs.min(20_000), &mut rng);
        let z = (est.value - exact) / est.stderr.max(1e-9);
        v.check(
            "hopf linking",
            (exact.abs() - 1.0).abs() < 1e-9 && z.abs() < 3.0,
            format!("exact {exact:.9}, sampled {:.4} ± {:.4}", est.value, est.stderr),
        );
    }

    // Planar fixed square: writhe and torsion vanish identically.
    {
        let square = chains::fixed_square();
        let wr = measures::writhe(&square).map_err(CliError::numeric)?;
        let tau = measures::total_torsion(&square);
        v.check(
            "planar square measures",
            wr == 0.0 && tau == 0.0,
            format!("writhe {wr}, torsion {tau}"),
        );
    }

    // Crossing-sign moments of uniform edge configurations.
    {
        let xi = Direction::new(Vec3::new(0.0, 0.0, 1.0)).map_err(CliError::usage)?;
        let m = ensemble::estimate_edge_pair_moments(args.moment_samples, xi, &stream);
        let ok = m.flags().is_empty() && m.q_prime > 3.0 * m.se_q_prime;
        v.check(
            "edge-pair crossing moments",
            ok,
            format!(
                "p={:.4} q={:.4}±{:.4} q'={:.4}±{:.4}",
                m.p, m.q, m.se_q, m.q_prime, m.se_q_prime
            ),
        );
    }

    if v.failures > 0 {
        Err(CliError::numeric(format!(
            "{} verification check(s) failed",
            v.failures
        )))
    } else {
        println!("all verification checks passed");
        Ok(())
    }
}
