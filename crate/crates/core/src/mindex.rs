//! Finite-grid diagnostics for the index `eta` of a function `U` whose
//! log-log ratio `log U(x) / log x` tends to `eta`.
//!
//! A finite grid cannot certify a limit. Everything here reports trend
//! evidence (the ratio at the largest point, spread over the upper half of
//! the grid, direction of drift) and never a yes/no membership answer.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};

type Eval = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

#[derive(Clone)]
enum Evaluator {
    Value(Eval),
    /// Returns `log U(x)` directly; avoids overflow for steep functions.
    LogValue(Eval),
}

/// A positive function `U` evaluated either directly or through `log U`.
#[derive(Clone)]
pub struct MFunction {
    label: String,
    eval: Evaluator,
}

impl fmt::Debug for MFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.eval {
            Evaluator::Value(_) => "value",
            Evaluator::LogValue(_) => "log-value",
        };
        f.debug_struct("MFunction")
            .field("label", &self.label)
            .field("evaluator", &kind)
            .finish()
    }
}

impl MFunction {
    pub fn new(label: impl Into<String>, u: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        Self {
            label: label.into(),
            eval: Evaluator::Value(Arc::new(u)),
        }
    }

    pub fn from_log(
        label: impl Into<String>,
        log_u: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            label: label.into(),
            eval: Evaluator::LogValue(Arc::new(log_u)),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// `a * x^eta`, evaluated in log space.
    pub fn power(a: f64, eta: f64) -> Self {
        let log_a = a.ln();
        Self::from_log(format!("power(a={a}, eta={eta})"), move |x| {
            log_a + eta * x.ln()
        })
    }

    /// `e^-floor(log x)`: index -1, not regularly varying.
    pub fn floor_log() -> Self {
        Self::from_log("floor-log", |x| -x.ln().floor())
    }

    /// `x^eta * log x`.
    pub fn power_log(eta: f64) -> Self {
        Self::from_log(format!("power-log(eta={eta})"), move |x| {
            eta * x.ln() + x.ln().ln()
        })
    }

    /// `x^eta * (2 + sin x)`.
    pub fn oscillating(eta: f64) -> Self {
        Self::from_log(format!("oscillating(eta={eta})"), move |x| {
            eta * x.ln() + (2.0 + x.sin()).ln()
        })
    }

    /// `e^x`, outside the class for every finite index.
    pub fn exponential() -> Self {
        Self::from_log("exp", |x| x)
    }

    /// `log U(x)` with domain checks.
    pub fn log_value(&self, x: f64) -> Result<f64> {
        if !(x > 1.0) || !x.is_finite() {
            return Err(domain(x, "x must be finite and > 1"));
        }
        let l = match &self.eval {
            Evaluator::Value(u) => {
                let v = u(x);
                if !(v > 0.0) || !v.is_finite() {
                    return Err(domain(x, format!("U(x) = {v} is not positive and finite")));
                }
                v.ln()
            }
            Evaluator::LogValue(log_u) => log_u(x),
        };
        if !l.is_finite() {
            return Err(domain(x, "log U(x) is not finite"));
        }
        Ok(l)
    }
}

fn domain(x: f64, reason: impl Into<String>) -> Error {
    Error::Domain {
        x,
        reason: reason.into(),
        line: None,
    }
}

/// `log U(x) / log x` for `x > 1`.
pub fn log_log_ratio(f: &MFunction, x: f64) -> Result<f64> {
    Ok(f.log_value(x)? / x.ln())
}

/// `count` geometrically spaced points from `min` to `max` inclusive.
pub fn geometric_grid(min: f64, max: f64, count: usize) -> Result<Vec<f64>> {
    if !(min > 0.0 && max > min && count >= 2) {
        return Err(Error::InvalidParameter(format!(
            "geometric grid needs 0 < min < max and count >= 2, got {min}, {max}, {count}"
        )));
    }
    let (a, b) = (min.ln(), max.ln());
    let step = (b - a) / (count - 1) as f64;
    Ok((0..count)
        .map(|i| match i {
            0 => min,
            _ if i == count - 1 => max,
            _ => (a + step * i as f64).exp(),
        })
        .collect())
}

pub const DEFAULT_GRID_POINTS: usize = 48;
pub const DEFAULT_GRID_MIN: f64 = 1e1;
pub const DEFAULT_GRID_MAX: f64 = 1e12;
pub const MIN_GRID_POINTS: usize = 8;
/// Net change of the upper-half ratios above which a monotone run counts as drifting.
pub const DEFAULT_DRIFT_TOLERANCE: f64 = 0.1;

/// 48 geometric points from 10 to 10^12.
pub fn default_grid() -> Vec<f64> {
    geometric_grid(DEFAULT_GRID_MIN, DEFAULT_GRID_MAX, DEFAULT_GRID_POINTS)
        .expect("default grid parameters are valid")
}

/// `{e^1, e^2, ..., e^count}`, where step functions of `log x` sit on their jumps.
pub fn exponent_grid(count: usize) -> Vec<f64> {
    (1..=count).map(|m| (m as f64).exp()).collect()
}

fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.len() < MIN_GRID_POINTS {
        return Err(Error::InvalidParameter(format!(
            "grid needs at least {MIN_GRID_POINTS} points, got {}",
            grid.len()
        )));
    }
    if let Some(&bad) = grid.iter().find(|x| !(**x > 1.0)) {
        return Err(domain(bad, "grid points must be > 1"));
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameter(
            "grid must be strictly increasing".into(),
        ));
    }
    Ok(())
}

fn upper_half(len: usize) -> std::ops::Range<usize> {
    len / 2..len
}

/// Least-squares slope and intercept of `ys` on `xs`.
fn least_squares(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let slope = sxy / sxx;
    (slope, my - slope * mx)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MIndexDiagnostic {
    pub label: String,
    pub grid: Vec<f64>,
    pub ratios: Vec<f64>,
    /// Ratio at the largest grid point.
    pub estimated_index: f64,
    /// `max |ratio - estimated_index|` over the upper half of the grid.
    pub max_deviation_tail: f64,
    /// Intercept of the upper-half ratios regressed on `1 / log x`; removes
    /// the `log a / log x` bias of `a x^eta` exactly.
    pub extrapolated_index: f64,
    /// Net change of the ratio across the upper half.
    pub drift: f64,
    /// Upper-half ratios move monotonically by more than the drift tolerance.
    pub drifting: bool,
}

pub fn estimate_m_index(f: &MFunction, grid: &[f64]) -> Result<MIndexDiagnostic> {
    estimate_m_index_with(f, grid, DEFAULT_DRIFT_TOLERANCE)
}

pub fn estimate_m_index_with(
    f: &MFunction,
    grid: &[f64],
    drift_tolerance: f64,
) -> Result<MIndexDiagnostic> {
    check_grid(grid)?;
    let ratios = grid
        .iter()
        .map(|&x| log_log_ratio(f, x))
        .collect::<Result<Vec<_>>>()?;
    let estimated_index = *ratios.last().expect("grid is non-empty");
    let tail = upper_half(grid.len());
    let tail_ratios = &ratios[tail.clone()];
    let max_deviation_tail = tail_ratios
        .iter()
        .map(|r| (r - estimated_index).abs())
        .fold(0.0, f64::max);
    let inv_logs: Vec<f64> = grid[tail].iter().map(|x| 1.0 / x.ln()).collect();
    let (_, extrapolated_index) = least_squares(&inv_logs, tail_ratios);
    let drift = estimated_index - tail_ratios[0];
    let monotone =
        tail_ratios.windows(2).all(|w| w[1] > w[0]) || tail_ratios.windows(2).all(|w| w[1] < w[0]);
    Ok(MIndexDiagnostic {
        label: f.label().to_string(),
        grid: grid.to_vec(),
        ratios,
        estimated_index,
        max_deviation_tail,
        extrapolated_index,
        drift,
        drifting: monotone && drift.abs() > drift_tolerance,
    })
}

/// Trend of `U(x) / x^(eta +- epsilon)` over the upper half of a grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SandwichReport {
    pub eta: f64,
    pub epsilon: f64,
    /// Slope of `log(U(x) / x^(eta + epsilon))` against `log x`.
    pub upper_slope: f64,
    /// Slope of `log(U(x) / x^(eta - epsilon))` against `log x`.
    pub lower_slope: f64,
    pub upper_to_zero: bool,
    pub lower_to_infinity: bool,
}

impl SandwichReport {
    /// Both ratios move the way the index `eta` requires.
    pub fn consistent(&self) -> bool {
        self.upper_to_zero && self.lower_to_infinity
    }
}

/// Checks that `U(x)/x^(eta+eps)` trends down and `U(x)/x^(eta-eps)` trends up
/// on the upper half of `grid`: negative (positive) least-squares slope in
/// log-log coordinates together with a net decrease (increase).
pub fn check_sandwich(
    f: &MFunction,
    eta: f64,
    epsilon: f64,
    grid: &[f64],
) -> Result<SandwichReport> {
    if !(epsilon > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "epsilon must be > 0, got {epsilon}"
        )));
    }
    check_grid(grid)?;
    let tail = &grid[upper_half(grid.len())];
    let logs_x: Vec<f64> = tail.iter().map(|x| x.ln()).collect();
    let logs_u = tail
        .iter()
        .map(|&x| f.log_value(x))
        .collect::<Result<Vec<_>>>()?;
    let trend = |power: f64| {
        let ys: Vec<f64> = logs_u
            .iter()
            .zip(&logs_x)
            .map(|(lu, lx)| lu - power * lx)
            .collect();
        let (slope, _) = least_squares(&logs_x, &ys);
        (slope, ys[ys.len() - 1] - ys[0])
    };
    let (upper_slope, upper_net) = trend(eta + epsilon);
    let (lower_slope, lower_net) = trend(eta - epsilon);
    Ok(SandwichReport {
        eta,
        epsilon,
        upper_slope,
        lower_slope,
        upper_to_zero: upper_slope < 0.0 && upper_net < 0.0,
        lower_to_infinity: lower_slope > 0.0 && lower_net > 0.0,
    })
}
