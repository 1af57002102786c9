//! Monte Carlo harness: exponential order-statistic lemmas, consistency
//! curves, the standardized statistic `T`, and the simulation grid.
//!
//! Replication `r` of an experiment always draws from
//! `RngStream::new(base_seed, id)` with an id fixed by `r` (and by the cell or
//! sample size where relevant), never by scheduling. Results are collected in
//! replication order, so reports do not depend on the worker count.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::estimators::{
    cadena_from_order_stat, cadena_scaled, estimate_series, EstimateSeries, Estimator,
    ScaleAssumption,
};
use crate::sample::KGrid;
use crate::sampling::{
    renyi_order_statistic, sample_floor_log, sample_hall, sample_pareto, splitmix64, HallTailModel,
    ParetoModel, RngStream,
};
use crate::stats::{ks_distance, mean, sample_variance, Summary};

/// Below this many usable replications a suite is reported as inconclusive.
pub const MIN_REPLICATIONS: usize = 100;

/// One-sided 1% critical constant of the Kolmogorov distribution.
pub const KS_CRITICAL_1PCT: f64 = 1.63;

/// Added to the asymptotic KS critical value for finite-n bias.
pub const KS_SLACK: f64 = 0.01;

/// Maximum share of degenerate replications before a run is rejected.
pub const MAX_DEGENERATE_SHARE: f64 = 0.01;

/// Thread pool selection for an experiment run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Engine {
    workers: Option<usize>,
}

impl Engine {
    /// `None` uses the global rayon pool.
    pub fn new(workers: Option<usize>) -> Result<Self> {
        if workers == Some(0) {
            return Err(Error::InvalidParameter("workers must be at least 1".into()));
        }
        Ok(Self { workers })
    }

    pub fn sequential() -> Self {
        Self { workers: Some(1) }
    }

    pub fn workers(&self) -> Option<usize> {
        self.workers
    }

    /// `f(0), ..., f(count - 1)` in index order.
    fn map<T, F>(&self, count: usize, f: F) -> Result<Vec<T>>
    where
        T: Send,
        F: Fn(usize) -> Result<T> + Sync + Send,
    {
        let run = || {
            (0..count)
                .into_par_iter()
                .map(&f)
                .collect::<Result<Vec<T>>>()
        };
        match self.workers {
            None => run(),
            Some(w) => rayon::ThreadPoolBuilder::new()
                .num_threads(w)
                .build()
                .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?
                .install(run),
        }
    }
}

/// How k is chosen for each sample size.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum KRule {
    /// Dense up to 100, then geometric; see [`KGrid::standard`].
    Standard,
    /// Every k in `1..=n-1`.
    Full,
    /// `k = floor(f * n)` for each fraction `f`.
    Fractions { fractions: Vec<f64> },
    /// `k = floor(n^delta)` with `0 < delta < 1`.
    Power { delta: f64 },
    /// Explicit k values.
    List { ks: Vec<usize> },
}

impl KRule {
    pub fn validate(&self) -> Result<()> {
        match self {
            KRule::Fractions { fractions } => {
                if fractions.is_empty() {
                    return Err(Error::InvalidParameter("empty fraction list".into()));
                }
                if let Some(f) = fractions.iter().find(|f| !(**f > 0.0 && **f < 1.0)) {
                    return Err(Error::InvalidParameter(format!(
                        "k fraction must lie in (0, 1), got {f}"
                    )));
                }
                Ok(())
            }
            KRule::Power { delta } if !(*delta > 0.0 && *delta < 1.0) => Err(
                Error::InvalidParameter(format!("delta must lie in (0, 1), got {delta}")),
            ),
            _ => Ok(()),
        }
    }

    /// The k values for sample size `n`. `scale` only affects [`KRule::Standard`].
    pub fn grid(&self, n: usize, scale: Option<f64>) -> Result<KGrid> {
        self.validate()?;
        match self {
            KRule::Standard => KGrid::standard(n, scale),
            KRule::Full => KGrid::full(n),
            KRule::Fractions { fractions } => {
                let mut ks: Vec<usize> = fractions
                    .iter()
                    .map(|f| (f * n as f64).floor() as usize)
                    .collect();
                ks.sort_unstable();
                ks.dedup();
                KGrid::new(ks, n)
            }
            KRule::Power { delta } => KGrid::new(vec![power_k(n, *delta)], n),
            KRule::List { ks } => KGrid::new(ks.clone(), n),
        }
    }

    /// The single k used by per-n experiments.
    pub fn single_k(&self, n: usize) -> Result<usize> {
        match self {
            KRule::Power { delta } => {
                self.validate()?;
                let k = power_k(n, *delta);
                KGrid::new(vec![k], n)?;
                Ok(k)
            }
            KRule::Fractions { fractions } if fractions.len() == 1 => Ok(self.grid(n, None)?.max()),
            KRule::List { ks } if ks.len() == 1 => Ok(self.grid(n, None)?.max()),
            _ => Err(Error::InvalidParameter(
                "this experiment needs one k per n: use a power rule, one fraction or one k".into(),
            )),
        }
    }
}

/// `floor(n^delta)`, corrected for rounding in `powf` at exact powers.
pub fn power_k(n: usize, delta: f64) -> usize {
    let nf = n as f64;
    let mut k = nf.powf(delta).floor() as usize;
    if ((k + 1) as f64).ln() <= delta * nf.ln() {
        k += 1;
    } else if k > 0 && (k as f64).ln() > delta * nf.ln() {
        k -= 1;
    }
    k
}

/// A grid of models, sample sizes and a k-rule.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub alphas: Vec<f64>,
    pub cs: Vec<f64>,
    pub ns: Vec<usize>,
    pub k_rule: KRule,
    pub replications: usize,
    pub base_seed: u64,
}

impl GridSpec {
    /// alpha in {0.1, 1, 1.5}, C in {0.1, 1, 10}, n in {1e3, 1e4, 1e5}.
    pub fn paper(base_seed: u64) -> Self {
        Self {
            alphas: vec![0.1, 1.0, 1.5],
            cs: vec![0.1, 1.0, 10.0],
            ns: vec![1_000, 10_000, 100_000],
            k_rule: KRule::Standard,
            replications: 1,
            base_seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(a) = self.alphas.iter().find(|a| !(**a > 0.0 && a.is_finite())) {
            return Err(Error::InvalidParameter(format!(
                "alpha must be > 0, got {a}"
            )));
        }
        if let Some(c) = self.cs.iter().find(|c| !(**c > 0.0 && c.is_finite())) {
            return Err(Error::InvalidParameter(format!("C must be > 0, got {c}")));
        }
        if let Some(n) = self.ns.iter().find(|n| **n < 2) {
            return Err(Error::TooFewValues { min: 2, got: *n });
        }
        if self.replications == 0 {
            return Err(Error::InvalidParameter(
                "replications must be at least 1".into(),
            ));
        }
        self.k_rule.validate()
    }
}

/// Sample size, k and replication count shared by the per-replication suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplicationPlan {
    pub n: usize,
    pub k: usize,
    pub replications: usize,
    pub base_seed: u64,
}

impl ReplicationPlan {
    pub fn new(n: usize, k: usize, replications: usize, base_seed: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewValues { min: 2, got: n });
        }
        if k == 0 || k >= n {
            return Err(Error::KOutOfRange { k, n, min: 1 });
        }
        if replications == 0 {
            return Err(Error::InvalidParameter(
                "replications must be at least 1".into(),
            ));
        }
        Ok(Self {
            n,
            k,
            replications,
            base_seed,
        })
    }

    fn stream(&self, replication: usize) -> RngStream {
        RngStream::new(self.base_seed, replication as u64)
    }

    fn log_n_over_k(&self) -> f64 {
        (self.n as f64 / self.k as f64).ln()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Statistic {
    /// `sqrt(k) (E_{n-k:n} - log(n/k))`.
    Z,
    /// `sqrt(k) (log(n/k) + log C) (1/alpha_hat - 1/alpha)`.
    T,
}

/// How `X_{n-k:n}` is produced in the normality suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SamplingMethod {
    /// Draw and sort all n observations.
    #[default]
    Full,
    /// Draw `E_{n-k:n}` by Rényi's representation and map it through the
    /// inverse tail, `X = inverse_tail(exp(-E))`.
    Renyi,
}

/// Replicated draws of a standardized statistic, compared with a centred normal.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NormalityResult {
    pub statistic: Statistic,
    pub plan: ReplicationPlan,
    pub model: Option<HallTailModel>,
    pub method: Option<SamplingMethod>,
    /// Standard deviation of the reference normal.
    pub reference_sd: f64,
    /// Replications excluded because the estimator was undefined.
    pub degenerate: usize,
    /// One value per non-degenerate replication, in replication order.
    pub t_samples: Vec<f64>,
    pub mean: f64,
    pub variance: f64,
    pub ks_distance_vs_normal: f64,
    /// For `T`: KS distance against `N(0, alpha^-2)`, the law of `T` when the
    /// tail is exactly Pareto.
    pub ks_distance_vs_inverse_scale: Option<f64>,
}

impl NormalityResult {
    pub fn usable(&self) -> usize {
        self.t_samples.len()
    }
}

/// `Z = sqrt(k) (E_{n-k:n} - log(n/k))` over independent replications.
pub fn lemma2_experiment(plan: ReplicationPlan, engine: &Engine) -> Result<NormalityResult> {
    let centre = plan.log_n_over_k();
    let scale = (plan.k as f64).sqrt();
    let z = engine.map(plan.replications, |r| {
        let e = renyi_order_statistic(plan.n, plan.n - plan.k, &plan.stream(r))?;
        Ok(scale * (e - centre))
    })?;
    Ok(NormalityResult {
        statistic: Statistic::Z,
        plan,
        model: None,
        method: None,
        reference_sd: 1.0,
        degenerate: 0,
        mean: mean(&z),
        variance: sample_variance(&z),
        ks_distance_vs_normal: ks_distance(&z, 0.0, 1.0),
        ks_distance_vs_inverse_scale: None,
        t_samples: z,
    })
}

/// Distribution of `E_{n-k:n} / log(n/k)` across replications.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatioSummary {
    pub plan: ReplicationPlan,
    pub ratios: Vec<f64>,
    pub summary: Summary,
}

pub fn lemma3_ratio_experiment(plan: ReplicationPlan, engine: &Engine) -> Result<RatioSummary> {
    let centre = plan.log_n_over_k();
    let ratios = engine.map(plan.replications, |r| {
        Ok(renyi_order_statistic(plan.n, plan.n - plan.k, &plan.stream(r))? / centre)
    })?;
    Ok(RatioSummary {
        plan,
        summary: Summary::of(&ratios),
        ratios,
    })
}

/// Draws of the estimator's standardized error `T` under a Hall-class tail
/// with known parameters.
pub fn normality_experiment(
    model: &HallTailModel,
    plan: ReplicationPlan,
    method: SamplingMethod,
    engine: &Engine,
) -> Result<NormalityResult> {
    let (n, k) = (plan.n, plan.k);
    let scale = ScaleAssumption::new(model.c())?;
    let alpha = model.alpha();
    let numerator = (n as f64 / k as f64).ln() + model.c().ln();
    let root_k = (k as f64).sqrt();

    let outcomes = engine.map(plan.replications, |r| {
        let stream = plan.stream(r);
        let x = match method {
            SamplingMethod::Full => sample_hall(n, model, &stream)?.sort().upper(k),
            SamplingMethod::Renyi => {
                let e = renyi_order_statistic(n, n - k, &stream)?;
                model.inverse_tail((-e).exp())
            }
        };
        match cadena_from_order_stat(n, k, scale, x) {
            // numerator / alpha_hat is log X_{n-k:n}
            Ok(_) => Ok(Some(root_k * (x.ln() - numerator / alpha))),
            Err(e) if e.is_degenerate() => Ok(None),
            Err(e) => Err(e),
        }
    })?;

    let degenerate = outcomes.iter().filter(|o| o.is_none()).count();
    if degenerate as f64 > MAX_DEGENERATE_SHARE * plan.replications as f64 {
        return Err(Error::TooManyDegenerate {
            degenerate,
            total: plan.replications,
        });
    }
    let t: Vec<f64> = outcomes.into_iter().flatten().collect();
    Ok(NormalityResult {
        statistic: Statistic::T,
        plan,
        model: Some(*model),
        method: Some(method),
        reference_sd: alpha,
        degenerate,
        mean: mean(&t),
        variance: sample_variance(&t),
        ks_distance_vs_normal: ks_distance(&t, 0.0, alpha),
        ks_distance_vs_inverse_scale: Some(ks_distance(&t, 0.0, 1.0 / alpha)),
        t_samples: t,
    })
}

/// Model used by the consistency suite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "kebab-case")]
pub enum TailModel {
    Pareto(ParetoModel),
    /// `P(X > x) = e^-floor(log x)`: index 1, scale 1, not regularly varying.
    FloorLog,
}

impl TailModel {
    /// The index the estimator should recover.
    pub fn target_alpha(&self) -> f64 {
        match self {
            TailModel::Pareto(m) => m.alpha(),
            TailModel::FloorLog => 1.0,
        }
    }

    pub fn scale(&self) -> f64 {
        match self {
            TailModel::Pareto(m) => m.c(),
            TailModel::FloorLog => 1.0,
        }
    }

    fn sample(&self, n: usize, stream: &RngStream) -> Result<crate::sample::OrderedSample> {
        Ok(match self {
            TailModel::Pareto(m) => sample_pareto(n, m, stream)?.sort(),
            TailModel::FloorLog => sample_floor_log(n, stream)?.sort(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConsistencyPoint {
    pub n: usize,
    pub k: usize,
    /// Median of `|1/alpha_hat - 1/alpha|` over non-degenerate replications.
    pub median_error: f64,
    pub errors: Summary,
    pub degenerate: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConsistencyCurve {
    pub model: TailModel,
    pub k_rule: KRule,
    pub replications: usize,
    pub base_seed: u64,
    pub points: Vec<ConsistencyPoint>,
}

impl ConsistencyCurve {
    pub fn ns(&self) -> Vec<usize> {
        self.points.iter().map(|p| p.n).collect()
    }

    pub fn medians(&self) -> Vec<f64> {
        self.points.iter().map(|p| p.median_error).collect()
    }

    pub fn strictly_decreasing(&self) -> bool {
        self.medians().windows(2).all(|w| w[1] < w[0])
    }
}

/// Stream id of replication `r` at sample size `n`; independent of which
/// other sizes are in the run.
fn size_stream_id(n: usize, r: usize) -> u64 {
    splitmix64(n as u64).wrapping_add(r as u64)
}

/// Median error of `1/alpha_hat` per sample size, using the model's true C.
/// Only `ns`, `k_rule`, `replications` and `base_seed` of `spec` are used.
pub fn consistency_experiment(
    model: &TailModel,
    spec: &GridSpec,
    engine: &Engine,
) -> Result<ConsistencyCurve> {
    if spec.ns.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameter(
            "sample sizes must be strictly increasing".into(),
        ));
    }
    if spec.ns.is_empty() || spec.replications == 0 {
        return Err(Error::InvalidParameter(
            "need at least one n and one replication".into(),
        ));
    }
    let scale = ScaleAssumption::new(model.scale())?;
    let inv_alpha = 1.0 / model.target_alpha();
    let mut points = Vec::with_capacity(spec.ns.len());
    for &n in &spec.ns {
        let k = spec.k_rule.single_k(n)?;
        let errors = engine.map(spec.replications, |r| {
            let stream = RngStream::new(spec.base_seed, size_stream_id(n, r));
            let os = model.sample(n, &stream)?;
            match cadena_scaled(&os, k, scale) {
                Ok(a) => Ok(Some((1.0 / a - inv_alpha).abs())),
                Err(e) if e.is_degenerate() => Ok(None),
                Err(e) => Err(e),
            }
        })?;
        let degenerate = errors.iter().filter(|e| e.is_none()).count();
        let errors: Vec<f64> = errors.into_iter().flatten().collect();
        if errors.is_empty() {
            return Err(Error::TooManyDegenerate {
                degenerate,
                total: spec.replications,
            });
        }
        let summary = Summary::of(&errors);
        points.push(ConsistencyPoint {
            n,
            k,
            median_error: summary.median,
            errors: summary,
            degenerate,
        });
    }
    Ok(ConsistencyCurve {
        model: *model,
        k_rule: spec.k_rule.clone(),
        replications: spec.replications,
        base_seed: spec.base_seed,
        points,
    })
}

/// One `(alpha, C, n)` cell of the simulation grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimulationCell {
    pub alpha: f64,
    pub c: f64,
    pub n: usize,
    pub stream_id: u64,
    /// Reference value for the plots.
    pub reference: f64,
    pub series: Vec<EstimateSeries>,
}

impl SimulationCell {
    pub fn series(&self, tag: &str) -> Option<&EstimateSeries> {
        self.series.iter().find(|s| s.estimator_tag == tag)
    }
}

/// Estimators compared in every cell.
pub fn simulation_estimators(c: f64) -> [Estimator; 5] {
    [
        Estimator::CadenaScaled { c },
        Estimator::Hill,
        Estimator::HillRecip,
        Estimator::Moment,
        Estimator::MomentRecip,
    ]
}

/// Stream id of a cell, derived from its parameters so that a cell draws the
/// same sample whether it is run alone or as part of a larger grid.
pub fn cell_stream_id(alpha: f64, c: f64, n: usize) -> u64 {
    splitmix64(splitmix64(splitmix64(alpha.to_bits()) ^ c.to_bits()) ^ n as u64)
}

/// Draws one Pareto sample for the cell and evaluates every estimator on
/// the k-grid given by `k_rule`.
pub fn simulate_cell(
    alpha: f64,
    c: f64,
    n: usize,
    k_rule: &KRule,
    base_seed: u64,
) -> Result<SimulationCell> {
    let model = ParetoModel::new(alpha, c)?;
    let stream_id = cell_stream_id(alpha, c, n);
    let os = sample_pareto(n, &model, &RngStream::new(base_seed, stream_id))?.sort();
    let grid = k_rule.grid(n, Some(c))?;
    let series = simulation_estimators(c)
        .into_iter()
        .map(|e| estimate_series(&os, e, &grid))
        .collect::<Result<Vec<_>>>()?;
    Ok(SimulationCell {
        alpha,
        c,
        n,
        stream_id,
        reference: alpha,
        series,
    })
}

/// Every cell of `spec`, ordered by alpha, then C, then n.
pub fn simulation_grid(spec: &GridSpec, engine: &Engine) -> Result<Vec<SimulationCell>> {
    spec.validate()?;
    let cells: Vec<(f64, f64, usize)> = spec
        .alphas
        .iter()
        .flat_map(|&a| {
            spec.cs
                .iter()
                .flat_map(move |&c| spec.ns.iter().map(move |&n| (a, c, n)))
        })
        .collect();
    engine.map(cells.len(), |i| {
        let (a, c, n) = cells[i];
        simulate_cell(a, c, n, &spec.k_rule, spec.base_seed)
    })
}

/// Outcome of a suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteStatus {
    Pass,
    Fail,
    Inconclusive,
}

/// One bound with the reasoning behind it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub lower: f64,
    pub upper: f64,
    pub derivation: String,
    pub pass: bool,
}

impl Check {
    pub fn within(name: &str, value: f64, lower: f64, upper: f64, derivation: String) -> Self {
        Self {
            name: name.into(),
            value,
            lower,
            upper,
            pass: value >= lower && value <= upper,
            derivation,
        }
    }

    /// `value < upper`, strictly.
    pub fn below(name: &str, value: f64, upper: f64, derivation: String) -> Self {
        Self {
            name: name.into(),
            value,
            lower: f64::NEG_INFINITY,
            upper,
            pass: value < upper,
            derivation,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub status: SuiteStatus,
    pub checks: Vec<Check>,
    pub note: Option<String>,
}

impl Verdict {
    fn from_checks(checks: Vec<Check>) -> Self {
        let status = if checks.iter().all(|c| c.pass) {
            SuiteStatus::Pass
        } else {
            SuiteStatus::Fail
        };
        Self {
            status,
            checks,
            note: None,
        }
    }
}

/// Mean, variance and KS bounds for a normality run, derived from the
/// reference standard deviation and the number of usable replications.
pub fn normality_verdict(result: &NormalityResult) -> Verdict {
    let r = result.usable();
    let sd = result.reference_sd;
    let var = sd * sd;
    let rf = r as f64;
    let mean_bound = 3.0 * sd / rf.sqrt();
    let var_rel = 5.0 * (2.0 / rf).sqrt();
    let ks_bound = KS_CRITICAL_1PCT / rf.sqrt() + KS_SLACK;
    let checks = vec![
        Check::within(
            "mean",
            result.mean,
            -mean_bound,
            mean_bound,
            format!("3 sd / sqrt(R) = 3 * {sd} / sqrt({r})"),
        ),
        Check::within(
            "variance",
            result.variance,
            var * (1.0 - var_rel),
            var * (1.0 + var_rel),
            format!("sd^2 (1 +/- 5 sqrt(2/R)), sd^2 = {var}, R = {r}"),
        ),
        Check::within(
            "ks",
            result.ks_distance_vs_normal,
            0.0,
            ks_bound,
            format!("{KS_CRITICAL_1PCT} / sqrt(R) + {KS_SLACK}, R = {r}"),
        ),
    ];
    let mut verdict = Verdict::from_checks(checks);
    if r < MIN_REPLICATIONS {
        verdict.status = SuiteStatus::Inconclusive;
        verdict.note = Some(format!(
            "{r} usable replications, below the minimum of {MIN_REPLICATIONS}"
        ));
    }
    verdict
}

/// Pareto: medians strictly decreasing in n. Floor-log: each median at most
/// `1 / log(n/k)`, the error of an integer-valued `log X_{n-k:n}` one step
/// from `log(n/k)`.
pub fn consistency_verdict(curve: &ConsistencyCurve) -> Verdict {
    let mut checks = Vec::new();
    match curve.model {
        TailModel::Pareto(_) => {
            for w in curve.points.windows(2) {
                checks.push(Check::below(
                    &format!("median change n={} -> n={}", w[0].n, w[1].n),
                    w[1].median_error - w[0].median_error,
                    0.0,
                    "consecutive medians strictly decreasing".into(),
                ));
            }
        }
        TailModel::FloorLog => {
            for p in &curve.points {
                let l = (p.n as f64 / p.k as f64).ln();
                checks.push(Check::within(
                    &format!("median n={}", p.n),
                    p.median_error,
                    0.0,
                    1.0 / l,
                    format!("1 / log(n/k) = 1 / {l}"),
                ));
            }
        }
    }
    let mut verdict = Verdict::from_checks(checks);
    if let TailModel::Pareto(_) = curve.model {
        if curve.points.len() < 2 {
            verdict.status = SuiteStatus::Inconclusive;
            verdict.note = Some("a trend needs at least two sample sizes".into());
        }
    }
    verdict
}
