//! Tail-index estimators.
//!
//! The single-order-statistic estimator reads the tail index off one point of
//! the Pareto quantile plot:
//!
//! ```text
//! alpha_hat(k) = (log(n/k) + log C) / log X_{n-k:n}
//! ```
//!
//! with `C = 1` for the basic form. Two variants shift the numerator and
//! denominator by constants, or average the basic form over a window of k.
//!
//! Hill and the Dekkers-Einmahl-de Haan moment estimator are included for
//! comparison. Both are written in their classical form, which targets
//! `gamma = 1/alpha`; the `*Recip` selectors return `1/gamma` so all
//! estimators can be compared on the alpha scale.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sample::{KGrid, OrderedSample};

/// Tail scale `C` of `P(X > x) ~ C x^-alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScaleAssumption(f64);

impl ScaleAssumption {
    pub fn new(c: f64) -> Result<Self> {
        if !(c > 0.0 && c.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "scale C must be > 0, got {c}"
            )));
        }
        Ok(Self(c))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl Default for ScaleAssumption {
    fn default() -> Self {
        Self(1.0)
    }
}

/// Constants of the shifted ratio `(c1 + log(n/k)) / (c2 + log X_{n-k:n})`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VariantShiftConfig {
    pub c1: f64,
    pub c2: f64,
}

impl VariantShiftConfig {
    pub fn new(c1: f64, c2: f64) -> Result<Self> {
        if !(c1.is_finite() && c2.is_finite()) {
            return Err(Error::InvalidParameter(
                "shift constants must be finite".into(),
            ));
        }
        Ok(Self { c1, c2 })
    }
}

/// Window `k1..=k2` of the averaged estimator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariantAverageConfig {
    k1: usize,
    k2: usize,
}

impl VariantAverageConfig {
    pub fn new(k1: usize, k2: usize) -> Result<Self> {
        if k1 == 0 || k1 >= k2 {
            return Err(Error::InvalidParameter(format!(
                "average window needs 1 <= k1 < k2, got k1={k1}, k2={k2}"
            )));
        }
        Ok(Self { k1, k2 })
    }

    pub fn k1(&self) -> usize {
        self.k1
    }

    pub fn k2(&self) -> usize {
        self.k2
    }
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::KOutOfRange { k, n, min: 1 });
    }
    Ok(())
}

/// `log(n * c / k)`, computed as `ln_1p` of the relative excess so it stays
/// accurate when `n * c` is close to `k` and is exactly zero when they match.
pub(crate) fn log_scaled_ratio(n: usize, k: usize, c: f64) -> f64 {
    let k = k as f64;
    ((n as f64 * c - k) / k).ln_1p()
}

/// Scaled estimator evaluated on a known order statistic `x = X_{n-k:n}`.
///
/// Exposed so that experiments which generate the order statistic directly
/// (without materialising the full sample) share the same arithmetic.
pub fn cadena_from_order_stat(n: usize, k: usize, scale: ScaleAssumption, x: f64) -> Result<f64> {
    check_k(n, k)?;
    let denominator = x.ln();
    if denominator == 0.0 || !denominator.is_finite() {
        return Err(Error::DegenerateDenominator { k });
    }
    // + 0.0 turns a -0.0 zero crossing into 0.0
    Ok(log_scaled_ratio(n, k, scale.value()) / denominator + 0.0)
}

/// `log(n/k) / log X_{n-k:n}`.
pub fn cadena_basic(os: &OrderedSample, k: usize) -> Result<f64> {
    cadena_scaled(os, k, ScaleAssumption::default())
}

/// `(log(n/k) + log C) / log X_{n-k:n}`.
pub fn cadena_scaled(os: &OrderedSample, k: usize, scale: ScaleAssumption) -> Result<f64> {
    check_k(os.n(), k)?;
    cadena_from_order_stat(os.n(), k, scale, os.upper(k))
}

/// `(c1 + log(n/k)) / (c2 + log X_{n-k:n})`.
pub fn variant_shift(os: &OrderedSample, k: usize, cfg: VariantShiftConfig) -> Result<f64> {
    let n = os.n();
    check_k(n, k)?;
    let denominator = cfg.c2 + os.upper(k).ln();
    if denominator == 0.0 {
        return Err(Error::DegenerateDenominator { k });
    }
    Ok((cfg.c1 + log_scaled_ratio(n, k, 1.0)) / denominator)
}

/// Mean of the basic estimator over `k1..=k2`.
pub fn variant_average(os: &OrderedSample, cfg: VariantAverageConfig) -> Result<f64> {
    check_k(os.n(), cfg.k2)?;
    let mut sum = 0.0;
    for k in cfg.k1..=cfg.k2 {
        sum += cadena_basic(os, k)?;
    }
    Ok(sum / (cfg.k2 - cfg.k1 + 1) as f64)
}

/// First and second moments of the log-excesses over `X_{n-k:n}`.
fn log_excess_moments(os: &OrderedSample, k: usize) -> Result<(f64, f64)> {
    check_k(os.n(), k)?;
    let threshold = os.upper(k).ln();
    let (mut s1, mut s2) = (0.0, 0.0);
    for x in os.top_descending(k).take(k) {
        let d = x.ln() - threshold;
        s1 += d;
        s2 += d * d;
    }
    let kf = k as f64;
    Ok((s1 / kf, s2 / kf))
}

/// Hill's estimator: mean log-excess of the top k values over `X_{n-k:n}`.
pub fn hill(os: &OrderedSample, k: usize) -> Result<f64> {
    Ok(log_excess_moments(os, k)?.0)
}

/// `M^{(j)} = k^-1 sum_{i=0}^{k-1} (log X_{n-i:n} - log X_{n-k:n})^j` for j in {1, 2}.
pub fn moment_stat(os: &OrderedSample, k: usize, j: u32) -> Result<f64> {
    let (m1, m2) = log_excess_moments(os, k)?;
    match j {
        1 => Ok(m1),
        2 => Ok(m2),
        _ => Err(Error::InvalidParameter(format!(
            "moment order must be 1 or 2, got {j}"
        ))),
    }
}

/// Dekkers-Einmahl-de Haan moment estimator
/// `M1 + 1 - (1/2) (1 - M1^2 / M2)^-1`.
pub fn dedh_moment(os: &OrderedSample, k: usize) -> Result<f64> {
    let (m1, m2) = log_excess_moments(os, k)?;
    if m2 == 0.0 {
        return Err(Error::DegenerateMoments { k });
    }
    let denominator = 1.0 - m1 * m1 / m2;
    if denominator == 0.0 {
        return Err(Error::DegenerateMoments { k });
    }
    Ok(m1 + 1.0 - 0.5 / denominator)
}

fn reciprocal(value: f64, k: usize) -> Result<f64> {
    if value == 0.0 {
        return Err(Error::DegenerateDenominator { k });
    }
    Ok(1.0 / value)
}

/// Estimator selector with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "estimator", rename_all = "kebab-case")]
pub enum Estimator {
    Cadena,
    CadenaScaled {
        c: f64,
    },
    Shift {
        c1: f64,
        c2: f64,
    },
    /// Averaged basic estimator over `k..=k + span`.
    Average {
        span: usize,
    },
    Hill,
    HillRecip,
    Moment,
    MomentRecip,
}

impl Estimator {
    pub fn tag(&self) -> &'static str {
        match self {
            Estimator::Cadena => "cadena",
            Estimator::CadenaScaled { .. } => "cadena-scaled",
            Estimator::Shift { .. } => "shift",
            Estimator::Average { .. } => "average",
            Estimator::Hill => "hill",
            Estimator::HillRecip => "hill-recip",
            Estimator::Moment => "moment",
            Estimator::MomentRecip => "moment-recip",
        }
    }

    /// Checks the parameters once so per-k evaluation only sees data errors.
    pub fn validate(&self) -> Result<()> {
        match *self {
            Estimator::CadenaScaled { c } => ScaleAssumption::new(c).map(|_| ()),
            Estimator::Shift { c1, c2 } => VariantShiftConfig::new(c1, c2).map(|_| ()),
            Estimator::Average { span: 0 } => Err(Error::InvalidParameter(
                "average span must be at least 1".into(),
            )),
            _ => Ok(()),
        }
    }

    pub fn evaluate(&self, os: &OrderedSample, k: usize) -> Result<f64> {
        match *self {
            Estimator::Cadena => cadena_basic(os, k),
            Estimator::CadenaScaled { c } => cadena_scaled(os, k, ScaleAssumption::new(c)?),
            Estimator::Shift { c1, c2 } => variant_shift(os, k, VariantShiftConfig::new(c1, c2)?),
            Estimator::Average { span } => {
                variant_average(os, VariantAverageConfig::new(k, k + span)?)
            }
            Estimator::Hill => hill(os, k),
            Estimator::HillRecip => reciprocal(hill(os, k)?, k),
            Estimator::Moment => dedh_moment(os, k),
            Estimator::MomentRecip => reciprocal(dedh_moment(os, k)?, k),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesPoint {
    pub k: usize,
    /// `None` marks a k where the estimator is undefined.
    pub value: Option<f64>,
}

/// One estimator evaluated over a k-grid at fixed n.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EstimateSeries {
    pub estimator_tag: String,
    pub params: Estimator,
    pub n: usize,
    pub points: Vec<SeriesPoint>,
}

impl EstimateSeries {
    pub fn ks(&self) -> impl Iterator<Item = usize> + '_ {
        self.points.iter().map(|p| p.k)
    }

    pub fn value_at(&self, k: usize) -> Option<f64> {
        self.points.iter().find(|p| p.k == k).and_then(|p| p.value)
    }

    pub fn defined_count(&self) -> usize {
        self.points.iter().filter(|p| p.value.is_some()).count()
    }
}

/// Evaluates `estimator` at every k of `grid`. Points where it is undefined
/// (degenerate denominators, an averaging window past `n - 1`, overflow) are
/// kept as undefined markers.
pub fn estimate_series(
    os: &OrderedSample,
    estimator: Estimator,
    grid: &KGrid,
) -> Result<EstimateSeries> {
    estimator.validate()?;
    if grid.max() >= os.n() {
        return Err(Error::KOutOfRange {
            k: grid.max(),
            n: os.n(),
            min: 1,
        });
    }
    let points = grid
        .ks()
        .iter()
        .map(|&k| SeriesPoint {
            k,
            value: estimator.evaluate(os, k).ok().filter(|v| v.is_finite()),
        })
        .collect();
    Ok(EstimateSeries {
        estimator_tag: estimator.tag().to_string(),
        params: estimator,
        n: os.n(),
        points,
    })
}
