//! Monte Carlo experiment runner.
//!
//! Experiments follow the subcollection protocol: for each chain length the
//! statistic is averaged inside each subcollection, the subcollection means
//! are averaged into the reported value, and the standard error is the
//! spread of the subcollection means over √(number of subcollections).
//!
//! Samples are drawn from keyed substreams (experiment, subcollection,
//! sample), so runs are reproducible bit-for-bit for a fixed seed no matter
//! how many worker threads execute them. Degenerate samples are replaced
//! from a fresh resampling lane and counted.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chains::{
    fixed_square, fixed_trefoil, fnv1a64, splitmix64, Chain, ChainModel, RngStream, StreamKey,
};
use crate::fitting::{fit_table, FitModel, FitResult};
use crate::geometry::{signed_crossing, Direction, Point3, Segment};
use crate::measures::{self, MeasureKind};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EnsembleError {
    #[error("invalid experiment spec: {0}")]
    SpecInvalid(String),
    #[error("excessive degeneracy: {resamples} resamples over {samples} samples")]
    ExcessiveDegeneracy { resamples: usize, samples: usize },
}

/// How per-sample measure values are aggregated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Statistic {
    Mean,
    MeanSquared,
    MeanAbs,
}

impl Statistic {
    #[inline]
    fn apply(self, x: f64) -> f64 {
        match self {
            Statistic::Mean => x,
            Statistic::MeanSquared => x * x,
            Statistic::MeanAbs => x.abs(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Mean => "mean",
            Statistic::MeanSquared => "mean_squared",
            Statistic::MeanAbs => "mean_abs",
        }
    }

    pub fn parse(s: &str) -> Option<Statistic> {
        match s {
            "mean" => Some(Statistic::Mean),
            "mean_squared" => Some(Statistic::MeanSquared),
            "mean_abs" => Some(Statistic::MeanAbs),
            _ => None,
        }
    }
}

/// Fixed closed curve paired with the random chain in linking experiments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum PartnerCurve {
    #[default]
    None,
    Square,
    Trefoil,
}

impl PartnerCurve {
    pub fn chain(self) -> Option<Chain> {
        match self {
            PartnerCurve::None => None,
            PartnerCurve::Square => Some(fixed_square()),
            PartnerCurve::Trefoil => Some(fixed_trefoil()),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PartnerCurve::None => "none",
            PartnerCurve::Square => "square",
            PartnerCurve::Trefoil => "trefoil",
        }
    }

    pub fn parse(s: &str) -> Option<PartnerCurve> {
        match s {
            "none" => Some(PartnerCurve::None),
            "square" => Some(PartnerCurve::Square),
            "trefoil" => Some(PartnerCurve::Trefoil),
            _ => None,
        }
    }
}

/// Full description of one Monte Carlo experiment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnsembleSpec {
    /// Model the measured chain is drawn from.
    pub model: ChainModel,
    /// Second random model for linking experiments between two random chains.
    #[serde(default)]
    pub second_model: Option<ChainModel>,
    /// Fixed partner curve for linking experiments against a fixed curve.
    #[serde(default)]
    pub partner: PartnerCurve,
    pub statistic: Statistic,
    pub measure: MeasureKind,
    pub lengths: Vec<usize>,
    pub samples_per_subcollection: usize,
    pub subcollections: usize,
    pub seed: u64,
}

impl EnsembleSpec {
    /// Stable label naming the series, e.g. `uniform_polygon_mean_squared_writhe`.
    pub fn series_label(&self) -> String {
        let mut label = format!(
            "{}_{}_{}",
            self.model.name(),
            self.statistic.name(),
            self.measure.name()
        );
        if let Some(second) = self.second_model {
            label.push_str("_vs_");
            label.push_str(second.name());
        }
        if self.partner != PartnerCurve::None {
            label.push_str("_vs_");
            label.push_str(self.partner.name());
        }
        label
    }

    /// Experiment id for the substream keys: a hash of everything except the
    /// seed and lengths (length is folded in per n).
    pub fn experiment_id(&self) -> u64 {
        fnv1a64(self.series_label().as_bytes())
    }

    pub fn validate(&self) -> Result<(), EnsembleError> {
        if self.lengths.is_empty() {
            return Err(EnsembleError::SpecInvalid("lengths list is empty".into()));
        }
        if self.lengths.windows(2).any(|w| w[0] >= w[1]) {
            return Err(EnsembleError::SpecInvalid(
                "lengths must be strictly ascending".into(),
            ));
        }
        if self.samples_per_subcollection == 0 || self.subcollections == 0 {
            return Err(EnsembleError::SpecInvalid("counts must be at least 1".into()));
        }
        if self.model.is_fixed() {
            return Err(EnsembleError::SpecInvalid(
                "the measured chain must come from a random model".into(),
            ));
        }
        let min_n = if self.model.is_closed() { 3 } else { 1 };
        if self.lengths[0] < min_n {
            return Err(EnsembleError::SpecInvalid(format!(
                "model {} needs n >= {min_n}",
                self.model.name()
            )));
        }
        match self.measure {
            MeasureKind::Linking => {
                match (&self.second_model, self.partner) {
                    (Some(m), PartnerCurve::None) => {
                        if m.is_fixed() {
                            return Err(EnsembleError::SpecInvalid(
                                "use `partner` for fixed curves".into(),
                            ));
                        }
                    }
                    (None, PartnerCurve::Square | PartnerCurve::Trefoil) => {}
                    (None, PartnerCurve::None) => {
                        return Err(EnsembleError::SpecInvalid(
                            "linking needs a second model or a fixed partner".into(),
                        ))
                    }
                    (Some(_), _) => {
                        return Err(EnsembleError::SpecInvalid(
                            "choose either a second model or a fixed partner, not both".into(),
                        ))
                    }
                }
            }
            _ => {
                if self.second_model.is_some() || self.partner != PartnerCurve::None {
                    return Err(EnsembleError::SpecInvalid(
                        "partners only apply to linking experiments".into(),
                    ));
                }
            }
        }
        Ok(())
    }
}

/// One length's aggregated statistic.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StatRow {
    pub n: usize,
    pub mean: f64,
    pub stderr: f64,
    pub samples: usize,
    pub degenerate_resamples: usize,
}

/// Per-length statistics of one series.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatTable {
    pub series: String,
    pub rows: Vec<StatRow>,
}

const MAX_SAMPLE_ATTEMPTS: u64 = 256;

/// One sample's statistic value, drawn from its keyed substream. Degenerate
/// draws move to a fresh resampling lane; the attempt count is returned.
fn sample_statistic(
    spec: &EnsembleSpec,
    n: usize,
    stream: &RngStream,
    base_key: StreamKey,
    partner: Option<&Chain>,
) -> Result<(f64, usize), EnsembleError> {
    for attempt in 0..MAX_SAMPLE_ATTEMPTS {
        let mut rng = stream.rng(base_key.resample(attempt));
        let chain = spec.model.generate(n, &mut rng);
        let measured = match spec.measure {
            MeasureKind::Writhe => measures::writhe(&chain),
            MeasureKind::Torsion => Ok(measures::total_torsion(&chain)),
            MeasureKind::SelfLinking => measures::self_linking(&chain),
            MeasureKind::Acn => measures::acn(&chain),
            MeasureKind::Linking => match (&spec.second_model, partner) {
                (Some(second), None) => {
                    let other = second.generate(n, &mut rng);
                    measures::linking_number(&chain, &other)
                }
                (None, Some(fixed)) => measures::linking_number(&chain, fixed),
                _ => unreachable!("validated spec"),
            },
        };
        match measured {
            Ok(value) => return Ok((spec.statistic.apply(value), attempt as usize)),
            Err(_) => continue,
        }
    }
    Err(EnsembleError::ExcessiveDegeneracy {
        resamples: MAX_SAMPLE_ATTEMPTS as usize,
        samples: 1,
    })
}

/// Runs the experiment described by `spec`.
///
/// Samples are evaluated in parallel; the reduction is an ordered fold over
/// the (subcollection, sample) grid, so the result is identical for any
/// worker thread count.
pub fn run_experiment(spec: &EnsembleSpec) -> Result<StatTable, EnsembleError> {
    spec.validate()?;
    let stream = RngStream::new(spec.seed);
    let exp_id = spec.experiment_id();
    let partner = spec.partner.chain();
    let subs = spec.subcollections;
    let per_sub = spec.samples_per_subcollection;

    let mut rows = Vec::with_capacity(spec.lengths.len());
    for &n in &spec.lengths {
        let experiment = splitmix64(exp_id ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let total = subs * per_sub;
        let samples: Vec<Result<(f64, usize), EnsembleError>> = (0..total)
            .into_par_iter()
            .map(|idx| {
                let key = StreamKey::new(
                    experiment,
                    (idx / per_sub) as u64,
                    (idx % per_sub) as u64,
                );
                sample_statistic(spec, n, &stream, key, partner.as_ref())
            })
            .collect();

        let mut resamples = 0usize;
        let mut sub_means = Vec::with_capacity(subs);
        for s in 0..subs {
            let mut sum = 0.0;
            for k in 0..per_sub {
                let (value, attempts) = samples[s * per_sub + k].clone()?;
                sum += value;
                resamples += attempts;
            }
            sub_means.push(sum / per_sub as f64);
        }
        if resamples * 100 > total {
            return Err(EnsembleError::ExcessiveDegeneracy { resamples, samples: total });
        }

        let mean = sub_means.iter().sum::<f64>() / subs as f64;
        let stderr = if subs > 1 {
            let var = sub_means.iter().map(|m| (m - mean) * (m - mean)).sum::<f64>()
                / (subs as f64 - 1.0);
            (var / subs as f64).sqrt()
        } else {
            0.0
        };
        rows.push(StatRow {
            n,
            mean,
            stderr,
            samples: total,
            degenerate_resamples: resamples,
        });
    }
    Ok(StatTable { series: spec.series_label(), rows })
}

// ---------------------------------------------------------------------------
// Edge-pair crossing moments
// ---------------------------------------------------------------------------

/// Empirical crossing-sign moments of uniform edge configurations, and the
/// combinations q = p + 2(u + v) and q′ = 3p + 2(2u + v + w) that govern the
/// quadratic growth of the squared measures.
///
/// * `p`: half the probability that two independent edges cross in
///   projection (also E[ε²]/2 for the crossing sign ε);
/// * `u`: E[ε₁ε₂] when both signs involve one shared edge and the other two
///   edges are consecutive (five independent points);
/// * `v`: E[ε₁ε₂] for two consecutive pairs (six independent points);
/// * `w`: E[ε₁ε₂] for the two skew pairs of four consecutive edges (five
///   independent points).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EdgePairMoments {
    pub p: f64,
    pub u: f64,
    pub v: f64,
    pub w: f64,
    pub se_p: f64,
    pub se_u: f64,
    pub se_v: f64,
    pub se_w: f64,
    pub q: f64,
    pub se_q: f64,
    pub q_prime: f64,
    pub se_q_prime: f64,
    pub samples: usize,
}

impl EdgePairMoments {
    /// Warnings for the sign expectations that should hold but are not
    /// an invariant of the estimator itself.
    pub fn flags(&self) -> Vec<String> {
        let mut flags = Vec::new();
        if self.q <= 0.0 {
            flags.push(format!("expected q > 0, estimated {}", self.q));
        }
        if self.q_prime <= 0.0 {
            flags.push(format!("expected q' > 0, estimated {}", self.q_prime));
        }
        if !(0.0..=0.5).contains(&self.p) {
            flags.push(format!("expected p in [0, 1/2], estimated {}", self.p));
        }
        flags
    }
}

fn moment_experiment(tag: &str) -> u64 {
    fnv1a64(format!("edge_pair_moments/{tag}").as_bytes())
}

/// Draws one configuration per sample and averages the sign product; exact
/// integer accumulation keeps the result independent of evaluation order.
fn estimate_moment(
    samples: usize,
    stream: &RngStream,
    experiment: u64,
    config: impl Fn(&mut rand_chacha::ChaCha8Rng) -> Result<i64, crate::geometry::GeomError>
        + Sync,
) -> (f64, f64) {
    let (sum, sumsq): (i64, i64) = (0..samples)
        .into_par_iter()
        .map(|idx| {
            let base = StreamKey::new(experiment, 0, idx as u64);
            for attempt in 0..MAX_SAMPLE_ATTEMPTS {
                let mut rng = stream.rng(base.resample(attempt));
                if let Ok(v) = config(&mut rng) {
                    return (v, v * v);
                }
            }
            panic!("edge-pair moment resampling did not terminate");
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    let nf = samples as f64;
    let mean = sum as f64 / nf;
    let var = (sumsq as f64 / nf - mean * mean) * nf / (nf - 1.0);
    (mean, (var / nf).sqrt())
}

/// Estimates the crossing-sign moments from `samples` draws per
/// configuration, projecting along `xi`.
pub fn estimate_edge_pair_moments(
    samples: usize,
    xi: Direction,
    stream: &RngStream,
) -> EdgePairMoments {
    let point = |rng: &mut rand_chacha::ChaCha8Rng| {
        Point3::new(rng.random::<f64>(), rng.random::<f64>(), rng.random::<f64>())
    };
    let edge = |a: Point3, b: Point3| Segment { start: a, end: b };

    // E[ε²] = 2p over two independent edges (four points).
    let (eps2_mean, eps2_se) = estimate_moment(
        samples,
        stream,
        moment_experiment("p"),
        |rng| {
            let (a, b, c, d) = (point(rng), point(rng), point(rng), point(rng));
            let s = signed_crossing(&edge(a, b), &edge(c, d), xi)? as i64;
            Ok(s * s)
        },
    );
    let (p, se_p) = (eps2_mean / 2.0, eps2_se / 2.0);

    // Shared edge against two consecutive edges (five points).
    let (u, se_u) = estimate_moment(
        samples,
        stream,
        moment_experiment("u"),
        |rng| {
            let (a, b, c, d, e) = (point(rng), point(rng), point(rng), point(rng), point(rng));
            let shared = edge(a, b);
            let s1 = signed_crossing(&shared, &edge(c, d), xi)? as i64;
            let s2 = signed_crossing(&shared, &edge(d, e), xi)? as i64;
            Ok(s1 * s2)
        },
    );

    // Two disjoint consecutive pairs (six points).
    let (v, se_v) = estimate_moment(
        samples,
        stream,
        moment_experiment("v"),
        |rng| {
            let (a, b, c) = (point(rng), point(rng), point(rng));
            let (d, e, f) = (point(rng), point(rng), point(rng));
            let s1 = signed_crossing(&edge(a, b), &edge(d, e), xi)? as i64;
            let s2 = signed_crossing(&edge(b, c), &edge(e, f), xi)? as i64;
            Ok(s1 * s2)
        },
    );

    // Four consecutive edges, skew pairs (1,3) and (2,4) (five points).
    let (w, se_w) = estimate_moment(
        samples,
        stream,
        moment_experiment("w"),
        |rng| {
            let (a, b, c, d, e) = (point(rng), point(rng), point(rng), point(rng), point(rng));
            let s1 = signed_crossing(&edge(a, b), &edge(c, d), xi)? as i64;
            let s2 = signed_crossing(&edge(b, c), &edge(d, e), xi)? as i64;
            Ok(s1 * s2)
        },
    );

    let q = p + 2.0 * (u + v);
    let se_q = (se_p * se_p + 4.0 * (se_u * se_u + se_v * se_v)).sqrt();
    let q_prime = 3.0 * p + 2.0 * (2.0 * u + v + w);
    let se_q_prime = (9.0 * se_p * se_p
        + 16.0 * se_u * se_u
        + 4.0 * se_v * se_v
        + 4.0 * se_w * se_w)
        .sqrt();

    EdgePairMoments {
        p,
        u,
        v,
        w,
        se_p,
        se_u,
        se_v,
        se_w,
        q,
        se_q,
        q_prime,
        se_q_prime,
        samples,
    }
}

// ---------------------------------------------------------------------------
// Full reproduction runs
// ---------------------------------------------------------------------------

/// Preset experiment sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Scale {
    /// 10 × 200 samples, n ∈ {10, …, 60}; minutes on a laptop.
    Desk,
    /// 10 × 500 samples, n ∈ {10, …, 100}; the published protocol.
    Paper,
}

impl Scale {
    pub fn lengths(self) -> Vec<usize> {
        match self {
            Scale::Desk => (1..=6).map(|k| 10 * k).collect(),
            Scale::Paper => (1..=10).map(|k| 10 * k).collect(),
        }
    }

    pub fn samples_per_subcollection(self) -> usize {
        match self {
            Scale::Desk => 200,
            Scale::Paper => 500,
        }
    }

    pub fn subcollections(self) -> usize {
        10
    }

    pub fn name(self) -> &'static str {
        match self {
            Scale::Desk => "desk",
            Scale::Paper => "paper",
        }
    }

    pub fn parse(s: &str) -> Option<Scale> {
        match s {
            "desk" => Some(Scale::Desk),
            "paper" => Some(Scale::Paper),
            _ => None,
        }
    }
}

/// One series of a reproduction run: its spec, table, fit model and fit.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeriesResult {
    pub name: String,
    pub spec: EnsembleSpec,
    pub table: StatTable,
    pub fit_model: FitModel,
    pub fit: Option<FitResult>,
}

/// The full set of scaling series.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReproduceResult {
    pub scale: Scale,
    pub seed: u64,
    pub series: Vec<SeriesResult>,
}

/// One entry of the reproduction catalogue.
#[derive(Debug, Clone, Copy)]
pub struct SeriesDef {
    pub name: &'static str,
    pub model: ChainModel,
    pub second_model: Option<ChainModel>,
    pub partner: PartnerCurve,
    pub statistic: Statistic,
    pub measure: MeasureKind,
    pub fit_model: FitModel,
}

/// The catalogue of series a reproduction run emits.
pub fn series_catalogue() -> Vec<SeriesDef> {
    use ChainModel::*;
    use FitModel::*;
    use MeasureKind::*;
    use PartnerCurve as P;
    use Statistic::*;
    let def = |name, model, second_model, partner, statistic, measure, fit_model| SeriesDef {
        name,
        model,
        second_model,
        partner,
        statistic,
        measure,
        fit_model,
    };
    vec![
        def("urp_msq_writhe", UniformPolygon, None, P::None, MeanSquared, Writhe, APlusBN2),
        def("urw_msq_writhe", UniformWalk, None, P::None, MeanSquared, Writhe, APlusBN2),
        def("urp_abs_writhe", UniformPolygon, None, P::None, MeanAbs, Writhe, APlusBN),
        def("urw_abs_writhe", UniformWalk, None, P::None, MeanAbs, Writhe, APlusBN),
        def("urp_msq_selflinking", UniformPolygon, None, P::None, MeanSquared, SelfLinking, APlusBN2),
        def("urw_msq_selflinking", UniformWalk, None, P::None, MeanSquared, SelfLinking, APlusBN2),
        def("urp_abs_selflinking", UniformPolygon, None, P::None, MeanAbs, SelfLinking, APlusBN),
        def("urw_abs_selflinking", UniformWalk, None, P::None, MeanAbs, SelfLinking, APlusBN),
        def("urp_msq_linking", UniformPolygon, Some(UniformPolygon), P::None, MeanSquared, Linking, APlusBN2),
        def("urw_msq_linking", UniformWalk, Some(UniformWalk), P::None, MeanSquared, Linking, APlusBN2),
        def("urp_abs_linking", UniformPolygon, Some(UniformPolygon), P::None, MeanAbs, Linking, APlusBN),
        def("urw_abs_linking", UniformWalk, Some(UniformWalk), P::None, MeanAbs, Linking, APlusBN),
        def("urp_abs_linking_square", UniformPolygon, None, P::Square, MeanAbs, Linking, APlusBSqrtN),
        def("urw_abs_linking_square", UniformWalk, None, P::Square, MeanAbs, Linking, APlusBSqrtN),
        def("urp_abs_linking_trefoil", UniformPolygon, None, P::Trefoil, MeanAbs, Linking, APlusBSqrtN),
        def("urw_abs_linking_trefoil", UniformWalk, None, P::Trefoil, MeanAbs, Linking, APlusBSqrtN),
        def("erw_abs_selflinking", EquilateralWalk, None, P::None, MeanAbs, SelfLinking, APlusBSqrtN),
        def("erw_abs_linking", EquilateralWalk, Some(EquilateralWalk), P::None, MeanAbs, Linking, APlusBSqrtN),
    ]
}

/// Runs every catalogued series at the given scale and fits its scaling law.
pub fn reproduce_all(scale: Scale, seed: u64) -> Result<ReproduceResult, EnsembleError> {
    let mut series = Vec::new();
    for def in series_catalogue() {
        let spec = EnsembleSpec {
            model: def.model,
            second_model: def.second_model,
            partner: def.partner,
            statistic: def.statistic,
            measure: def.measure,
            lengths: scale.lengths(),
            samples_per_subcollection: scale.samples_per_subcollection(),
            subcollections: scale.subcollections(),
            seed,
        };
        let table = run_experiment(&spec)?;
        let fit = fit_table(&table, def.fit_model).ok();
        series.push(SeriesResult {
            name: def.name.to_string(),
            spec,
            table,
            fit_model: def.fit_model,
            fit,
        });
    }
    Ok(ReproduceResult { scale, seed, series })
}

impl ReproduceResult {
    pub fn series_by_name(&self, name: &str) -> Option<&SeriesResult> {
        self.series.iter().find(|s| s.name == name)
    }
}

// ---------------------------------------------------------------------------
// CSV serialization
// ---------------------------------------------------------------------------

/// StatTable rows as CSV with a fixed header.
pub fn stat_csv(tables: &[&StatTable]) -> String {
    let mut out = String::from("series,n,mean,stderr,samples,degenerate_resamples\n");
    for t in tables {
        for r in &t.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                t.series, r.n, r.mean, r.stderr, r.samples, r.degenerate_resamples
            ));
        }
    }
    out
}

/// Parses CSV produced by [`stat_csv`] back into tables, one per series.
pub fn parse_stat_csv(text: &str) -> Result<Vec<StatTable>, EnsembleError> {
    let mut tables: Vec<StatTable> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with("series,") {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 6 {
            return Err(EnsembleError::SpecInvalid(format!(
                "line {}: expected 6 CSV fields, got {}",
                lineno + 1,
                fields.len()
            )));
        }
        let parse_err =
            |what: &str| EnsembleError::SpecInvalid(format!("line {}: bad {what}", lineno + 1));
        let row = StatRow {
            n: fields[1].parse().map_err(|_| parse_err("n"))?,
            mean: fields[2].parse().map_err(|_| parse_err("mean"))?,
            stderr: fields[3].parse().map_err(|_| parse_err("stderr"))?,
            samples: fields[4].parse().map_err(|_| parse_err("samples"))?,
            degenerate_resamples: fields[5].parse().map_err(|_| parse_err("resamples"))?,
        };
        match tables.last_mut() {
            Some(t) if t.series == fields[0] => t.rows.push(row),
            _ => tables.push(StatTable { series: fields[0].to_string(), rows: vec![row] }),
        }
    }
    Ok(tables)
}

/// Fit rows as CSV: `series,model,a,stderr_a,b,stderr_b,r2`.
pub fn fit_csv(rows: &[(String, FitModel, FitResult)]) -> String {
    let mut out = String::from("series,model,a,stderr_a,b,stderr_b,r2\n");
    for (series, model, f) in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            series,
            model.name(),
            f.a,
            f.stderr_a,
            f.b,
            f.stderr_b,
            f.r_squared
        ));
    }
    out
}

/// Top-level JSON document for experiment and reproduction outputs.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunDocument {
    pub seed: u64,
    pub scale: Option<String>,
    pub timestamp_unix: u64,
    pub version: String,
    pub series: Vec<SeriesResult>,
}

impl RunDocument {
    pub fn new(seed: u64, scale: Option<String>, series: Vec<SeriesResult>) -> Self {
        let timestamp_unix = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        Self {
            seed,
            scale,
            timestamp_unix,
            version: env!("CARGO_PKG_VERSION").to_string(),
            series,
        }
    }
}
