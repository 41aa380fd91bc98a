//! Least-squares recovery of `(d, e, C)` from a series `value ≈ C T^d ln(T)^e`.

use serde::{Deserialize, Serialize};

use super::HarnessError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum SeriesKind {
    LatticeCount,
    HaarVolume,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CountSeries {
    pub kind: SeriesKind,
    /// `(T, value)` with `T` strictly increasing.
    pub rows: Vec<(f64, f64)>,
}

impl CountSeries {
    pub fn new(kind: SeriesKind, rows: Vec<(f64, f64)>) -> Result<Self, HarnessError> {
        if rows.windows(2).any(|w| !(w[0].0 < w[1].0)) {
            return Err(HarnessError::BadSeries("T must be strictly increasing".into()));
        }
        if rows.iter().any(|r| !(r.1 >= 0.0)) {
            return Err(HarnessError::BadSeries("values must be nonnegative".into()));
        }
        Ok(CountSeries { kind, rows })
    }

    /// Values nondecreasing in `T`.
    pub fn is_monotone(&self) -> bool {
        self.rows.windows(2).all(|w| w[0].1 <= w[1].1)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FitResult {
    pub d_hat: f64,
    pub e_hat: usize,
    pub constant_hat: f64,
    /// RMS of the log-deviations over the window.
    pub residual: f64,
    pub window: (f64, f64),
    pub rows_used: usize,
}

/// `n` log-spaced points from `tmin` to `tmax` inclusive.
pub fn log_grid(tmin: f64, tmax: f64, n: usize) -> Vec<f64> {
    if n <= 1 {
        return vec![tmax];
    }
    let (a, b) = (tmin.ln(), tmax.ln());
    (0..n).map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp()).collect()
}

/// Fits `ln v − e ln ln T = ln C + d ln T` over `[T_max/100, T_max]` for every
/// `e < r` and keeps the `e` with the smallest residual.
pub fn fit_growth(series: &CountSeries, r: usize) -> Result<FitResult, HarnessError> {
    let tmax = series.rows.last().map(|x| x.0).ok_or(HarnessError::InsufficientData)?;
    let tmin = tmax / 100.0;
    let rows: Vec<(f64, f64)> =
        series.rows.iter().copied().filter(|&(t, v)| t >= tmin * (1.0 - 1e-12) && t > 1.0 && v > 0.0).collect();
    if rows.len() < 8 || rows.last().unwrap().0 < 10.0 * rows[0].0 * (1.0 - 1e-9) {
        return Err(HarnessError::InsufficientData);
    }
    let x: Vec<f64> = rows.iter().map(|r| r.0.ln()).collect();
    let mut best: Option<FitResult> = None;
    for e in 0..r.max(1) {
        let y: Vec<f64> = rows.iter().map(|&(t, v)| v.ln() - e as f64 * t.ln().ln()).collect();
        let (slope, intercept, rms) = least_squares(&x, &y);
        let fit = FitResult {
            d_hat: slope,
            e_hat: e,
            constant_hat: intercept.exp(),
            residual: rms,
            window: (rows[0].0, tmax),
            rows_used: rows.len(),
        };
        if best.as_ref().map_or(true, |b| fit.residual < b.residual) {
            best = Some(fit);
        }
    }
    Ok(best.expect("at least one candidate"))
}

fn least_squares(x: &[f64], y: &[f64]) -> (f64, f64, f64) {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxx: f64 = x.iter().map(|a| (a - mx) * (a - mx)).sum();
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let sse: f64 = x.iter().zip(y).map(|(a, b)| (b - intercept - slope * a).powi(2)).sum();
    (slope, intercept, (sse / n).sqrt())
}
