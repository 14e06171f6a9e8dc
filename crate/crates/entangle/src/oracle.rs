//! Slow, independent estimators used to cross-check the exact kernel.
//!
//! Two routes that must agree with the closed-form code paths:
//!
//! * direction sampling: diagram crossing sums averaged over projections,
//!   which converge to linking number, writhe and average crossing number;
//! * brute-force quadrature: adaptive tensor Gauss–Legendre integration of
//!   the Gauss integrand over a segment pair.
//!
//! These are test instruments, not production paths; they may be orders of
//! magnitude slower than the kernel.

use rand::Rng;
use thiserror::Error;

use crate::chains::Chain;
use crate::geometry::{signed_crossing, triple, Direction, GeomError, Segment};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum OracleError {
    /// Requested tolerance was not reached at maximum subdivision depth.
    #[error("quadrature failed to reach tolerance at maximum refinement depth")]
    QuadratureFailure,
}

/// Estimate with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub stderr: f64,
}

// ---------------------------------------------------------------------------
// Projection-direction sampling
// ---------------------------------------------------------------------------

const MAX_DIRECTION_RESAMPLES: usize = 10_000;

fn mean_stderr(values: &[f64]) -> Estimate {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return Estimate { value: mean, stderr: 0.0 };
    }
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0);
    Estimate { value: mean, stderr: (var / n).sqrt() }
}

/// Sums `f` over directions, resampling any direction whose projection is
/// degenerate for the summand at hand.
fn sample_directions<R: Rng + ?Sized>(
    ndirs: usize,
    rng: &mut R,
    mut f: impl FnMut(Direction) -> Result<f64, GeomError>,
) -> Estimate {
    let mut values = Vec::with_capacity(ndirs);
    let mut resamples = 0usize;
    while values.len() < ndirs {
        let xi = Direction::sample_uniform(rng);
        match f(xi) {
            Ok(v) => values.push(v),
            Err(_) => {
                resamples += 1;
                assert!(
                    resamples < MAX_DIRECTION_RESAMPLES,
                    "direction resampling did not terminate; inputs are not generic"
                );
            }
        }
    }
    mean_stderr(&values)
}

/// Diagram writhe (algebraic self-crossing sum) averaged over sampled
/// projection directions. Converges to the writhe of the chain.
pub fn writhe_by_projection<R: Rng + ?Sized>(c: &Chain, ndirs: usize, rng: &mut R) -> Estimate {
    let edges: Vec<Segment> = c.edges().collect();
    sample_directions(ndirs, rng, |xi| {
        let mut sum = 0i64;
        for i in 0..edges.len() {
            for j in (i + 1)..edges.len() {
                if c.edges_adjacent(i, j) {
                    continue;
                }
                sum += signed_crossing(&edges[i], &edges[j], xi)? as i64;
            }
        }
        Ok(sum as f64)
    })
}

/// Half the algebraic inter-chain crossing sum averaged over sampled
/// directions. Converges to the linking number of the two chains.
pub fn linking_by_projection<R: Rng + ?Sized>(
    a: &Chain,
    b: &Chain,
    ndirs: usize,
    rng: &mut R,
) -> Estimate {
    let ea: Vec<Segment> = a.edges().collect();
    let eb: Vec<Segment> = b.edges().collect();
    sample_directions(ndirs, rng, |xi| {
        let mut sum = 0i64;
        for sa in &ea {
            for sb in &eb {
                sum += signed_crossing(sa, sb, xi)? as i64;
            }
        }
        Ok(sum as f64 / 2.0)
    })
}

/// Unsigned self-crossing count averaged over sampled directions. Converges
/// to the average crossing number of the chain.
pub fn acn_by_projection<R: Rng + ?Sized>(c: &Chain, ndirs: usize, rng: &mut R) -> Estimate {
    let edges: Vec<Segment> = c.edges().collect();
    sample_directions(ndirs, rng, |xi| {
        let mut sum = 0i64;
        for i in 0..edges.len() {
            for j in (i + 1)..edges.len() {
                if c.edges_adjacent(i, j) {
                    continue;
                }
                sum += signed_crossing(&edges[i], &edges[j], xi)?.unsigned_abs() as i64;
            }
        }
        Ok(sum as f64)
    })
}

// ---------------------------------------------------------------------------
// Gauss-Legendre quadrature
// ---------------------------------------------------------------------------

/// Gauss–Legendre nodes and weights on [-1, 1].
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Computes an `order`-point rule by Newton iteration on P_order.
    pub fn new(order: usize) -> Self {
        assert!(order >= 2);
        let n = order;
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for k in 0..n {
            // Tricomi-style initial guess, then Newton.
            let mut x = (std::f64::consts::PI * (k as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre_and_deriv(n, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            let (_, dp) = legendre_and_deriv(n, x);
            nodes[n - 1 - k] = x;
            weights[n - 1 - k] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        Self { nodes, weights }
    }

    /// ∫ f over [x0,x1]×[y0,y1] by the tensor rule.
    pub fn integrate_2d(
        &self,
        f: &impl Fn(f64, f64) -> f64,
        x0: f64,
        x1: f64,
        y0: f64,
        y1: f64,
    ) -> f64 {
        let hx = 0.5 * (x1 - x0);
        let cx = 0.5 * (x1 + x0);
        let hy = 0.5 * (y1 - y0);
        let cy = 0.5 * (y1 + y0);
        let mut sum = 0.0;
        for (xi, wi) in self.nodes.iter().zip(&self.weights) {
            let x = cx + hx * xi;
            let mut row = 0.0;
            for (yj, wj) in self.nodes.iter().zip(&self.weights) {
                row += wj * f(x, cy + hy * yj);
            }
            sum += wi * row;
        }
        sum * hx * hy
    }
}

/// (P_n(x), P_n'(x)) by the three-term recurrence.
fn legendre_and_deriv(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

const QUAD_MAX_DEPTH: usize = 26;

#[derive(Debug, Clone, Copy)]
struct Cell {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

const UNIT_SQUARE: Cell = Cell { x0: 0.0, x1: 1.0, y0: 0.0, y1: 1.0 };

impl Cell {
    fn quarters(self) -> [Cell; 4] {
        let xm = 0.5 * (self.x0 + self.x1);
        let ym = 0.5 * (self.y0 + self.y1);
        [
            Cell { x1: xm, y1: ym, ..self },
            Cell { x0: xm, y1: ym, ..self },
            Cell { x1: xm, y0: ym, ..self },
            Cell { x0: xm, y0: ym, ..self },
        ]
    }
}

fn adaptive_2d(
    rule: &GaussLegendre,
    f: &impl Fn(f64, f64) -> f64,
    cell: Cell,
    tol: f64,
    depth: usize,
) -> Result<f64, OracleError> {
    let coarse = rule.integrate_2d(f, cell.x0, cell.x1, cell.y0, cell.y1);
    let quarters = cell.quarters();
    let fine: f64 = quarters
        .iter()
        .map(|q| rule.integrate_2d(f, q.x0, q.x1, q.y0, q.y1))
        .sum();
    if (coarse - fine).abs() <= tol {
        return Ok(fine);
    }
    if depth >= QUAD_MAX_DEPTH {
        return Err(OracleError::QuadratureFailure);
    }
    let mut sum = 0.0;
    for q in quarters {
        sum += adaptive_2d(rule, f, q, tol / 4.0, depth + 1)?;
    }
    Ok(sum)
}

/// Gauss integral of a segment pair by brute-force adaptive quadrature of the
/// integrand (ȧ, ḃ, a−b)/|a−b|³, normalized by 4π. Absolute tolerance `tol`.
pub fn seg_pair_quadrature(a: &Segment, b: &Segment, tol: f64) -> Result<f64, OracleError> {
    let a0 = a.start;
    let da = a.dir();
    let b0 = b.start;
    let db = b.dir();
    let f = move |t: f64, s: f64| {
        let r = (a0 + da * t) - (b0 + db * s);
        triple(da, db, r) / r.norm().powi(3)
    };
    let rule = GaussLegendre::new(8);
    let raw = adaptive_2d(&rule, &f, UNIT_SQUARE, tol * 4.0 * std::f64::consts::PI, 0)?;
    Ok(raw / (4.0 * std::f64::consts::PI))
}

/// Unsigned counterpart of [`seg_pair_quadrature`]: ∬ |integrand| / 2π, the
/// pair's contribution to the average crossing number.
pub fn seg_pair_abs_quadrature(a: &Segment, b: &Segment, tol: f64) -> Result<f64, OracleError> {
    let a0 = a.start;
    let da = a.dir();
    let b0 = b.start;
    let db = b.dir();
    let f = move |t: f64, s: f64| {
        let r = (a0 + da * t) - (b0 + db * s);
        (triple(da, db, r) / r.norm().powi(3)).abs()
    };
    let rule = GaussLegendre::new(8);
    let raw = adaptive_2d(&rule, &f, UNIT_SQUARE, tol * 2.0 * std::f64::consts::PI, 0)?;
    Ok(raw / (2.0 * std::f64::consts::PI))
}
