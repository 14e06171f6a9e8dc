//! Two-parameter least-squares scaling fits.
//!
//! Every model has the form y = a + b·g(n) with g one of n, n² or √n, so the
//! normal equations are solved in closed form after centering g. Fits are
//! unweighted ordinary least squares; coefficient standard errors come from
//! the unbiased residual variance.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ensemble::StatTable;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FitError {
    #[error("fit needs at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("singular design: all transformed abscissae are equal")]
    SingularDesign,
    #[error("tables have different n grids")]
    GridMismatch,
}

/// The scaling laws fitted in the experiments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FitModel {
    /// y = a + b·n
    APlusBN,
    /// y = a + b·n²
    APlusBN2,
    /// y = a + b·√n
    APlusBSqrtN,
}

impl FitModel {
    #[inline]
    pub fn g(self, n: f64) -> f64 {
        match self {
            FitModel::APlusBN => n,
            FitModel::APlusBN2 => n * n,
            FitModel::APlusBSqrtN => n.sqrt(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FitModel::APlusBN => "a_plus_b_n",
            FitModel::APlusBN2 => "a_plus_b_n2",
            FitModel::APlusBSqrtN => "a_plus_b_sqrt_n",
        }
    }

    pub fn parse(s: &str) -> Option<FitModel> {
        match s {
            "a_plus_b_n" => Some(FitModel::APlusBN),
            "a_plus_b_n2" => Some(FitModel::APlusBN2),
            "a_plus_b_sqrt_n" => Some(FitModel::APlusBSqrtN),
            _ => None,
        }
    }
}

/// Coefficients, their standard errors and the coefficient of determination.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    pub a: f64,
    pub b: f64,
    pub stderr_a: f64,
    pub stderr_b: f64,
    pub r_squared: f64,
}

/// Ordinary least squares of `ys` against [1, g(n)].
pub fn fit(xs: &[f64], ys: &[f64], model: FitModel) -> Result<FitResult, FitError> {
    let m = xs.len();
    if m < 3 || ys.len() != m {
        return Err(FitError::TooFewPoints(m.min(ys.len())));
    }
    let gs: Vec<f64> = xs.iter().map(|&n| model.g(n)).collect();
    let g_bar = gs.iter().sum::<f64>() / m as f64;
    let y_bar = ys.iter().sum::<f64>() / m as f64;

    let sgg: f64 = gs.iter().map(|g| (g - g_bar) * (g - g_bar)).sum();
    if sgg == 0.0 {
        return Err(FitError::SingularDesign);
    }
    let sgy: f64 = gs.iter().zip(ys).map(|(g, y)| (g - g_bar) * (y - y_bar)).sum();

    let b = sgy / sgg;
    let a = y_bar - b * g_bar;

    let ss_res: f64 = gs
        .iter()
        .zip(ys)
        .map(|(g, y)| {
            let r = y - (a + b * g);
            r * r
        })
        .sum();
    let ss_tot: f64 = ys.iter().map(|y| (y - y_bar) * (y - y_bar)).sum();

    // With an intercept, SSres ≤ SStot; zero-variance data therefore has
    // zero residuals and R² is taken as 1 by continuity.
    let r_squared = if ss_tot == 0.0 { 1.0 } else { 1.0 - ss_res / ss_tot };

    let sigma2 = ss_res / (m as f64 - 2.0);
    let stderr_b = (sigma2 / sgg).sqrt();
    let stderr_a = (sigma2 * (1.0 / m as f64 + g_bar * g_bar / sgg)).sqrt();

    Ok(FitResult { a, b, stderr_a, stderr_b, r_squared })
}

/// Fits the `mean` column of a [`StatTable`].
pub fn fit_table(table: &StatTable, model: FitModel) -> Result<FitResult, FitError> {
    let xs: Vec<f64> = table.rows.iter().map(|r| r.n as f64).collect();
    let ys: Vec<f64> = table.rows.iter().map(|r| r.mean).collect();
    fit(&xs, &ys, model)
}

/// Comparison of a mean-squared series against its mean-absolute partner:
/// the per-length ratio √(mean squared)/mean |·| and the slope relation
/// b_abs ≈ √q expected when the underlying measure is centered normal.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConjectureReport {
    /// (n, √(mean squared)/mean absolute) per grid point.
    pub ratios: Vec<(usize, f64)>,
    pub mean_ratio: f64,
    /// Quadratic-in-n coefficient fitted to the mean-squared series.
    pub q: f64,
    /// Linear slope fitted to the mean-absolute series.
    pub b_abs: f64,
    /// b_abs / √q; √(2/π) ≈ 0.798 for a centered normal measure.
    pub b_abs_over_sqrt_q: f64,
}

/// Checks the √(E[X²]) ~ E[|X|] relation between two tables on one n grid.
pub fn compare_conjecture(
    msq: &StatTable,
    mabs: &StatTable,
) -> Result<ConjectureReport, FitError> {
    if msq.rows.len() != mabs.rows.len()
        || msq.rows.iter().zip(&mabs.rows).any(|(r, s)| r.n != s.n)
    {
        return Err(FitError::GridMismatch);
    }
    let ratios: Vec<(usize, f64)> = msq
        .rows
        .iter()
        .zip(&mabs.rows)
        .map(|(r, s)| (r.n, r.mean.max(0.0).sqrt() / s.mean))
        .collect();
    let mean_ratio = ratios.iter().map(|(_, r)| r).sum::<f64>() / ratios.len() as f64;
    let q = fit_table(msq, FitModel::APlusBN2)?.b;
    let b_abs = fit_table(mabs, FitModel::APlusBN)?.b;
    Ok(ConjectureReport {
        ratios,
        mean_ratio,
        q,
        b_abs,
        b_abs_over_sqrt_q: b_abs / q.sqrt(),
    })
}
