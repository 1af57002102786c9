//! Seeded random streams and samplers for the test distributions.
//!
//! # Generator
//!
//! Every stream is a xoshiro256++ generator. A stream is identified by
//! `(seed, stream_id)`; its 64-bit key is
//!
//! ```text
//! key = splitmix64(seed XOR splitmix64(stream_id))
//! ```
//!
//! where `splitmix64(s)` is one SplitMix64 step from state `s` (add
//! `0x9e3779b97f4a7c15`, then the standard 30/27/31 xor-shift-multiply
//! finaliser). The xoshiro state is filled from `key` by four further
//! SplitMix64 steps, as in the reference `seed_from_u64`. A uniform is built
//! from the top 52 bits of each output `w` as `((w >> 12) + 0.5) / 2^52`,
//! which is exact in f64 and lies in the open interval (0, 1).
//!
//! # Pareto support
//!
//! `F(x) = 1 - C x^-alpha` vanishes at `x = C^(1/alpha)`, which is the lower
//! end of the support used here.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::{SplitMix64, Xoshiro256PlusPlus};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sample::{OrderedSample, RawSample};

/// Deterministic stream identified by a seed and a replication index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RngStream {
    pub seed: u64,
    pub stream_id: u64,
}

pub(crate) fn splitmix64(state: u64) -> u64 {
    SplitMix64::seed_from_u64(state).next_u64()
}

impl RngStream {
    pub fn new(seed: u64, stream_id: u64) -> Self {
        Self { seed, stream_id }
    }

    pub fn key(&self) -> u64 {
        splitmix64(self.seed ^ splitmix64(self.stream_id))
    }

    /// A fresh generator positioned at the start of the stream.
    pub fn generator(&self) -> StreamRng {
        StreamRng {
            inner: Xoshiro256PlusPlus::seed_from_u64(self.key()),
        }
    }
}

/// Running generator of one [`RngStream`]. Not meant to be shared.
#[derive(Debug, Clone)]
pub struct StreamRng {
    inner: Xoshiro256PlusPlus,
}

const INV_2_52: f64 = 1.0 / 4_503_599_627_370_496.0;

impl StreamRng {
    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform on the open interval (0, 1).
    pub fn uniform(&mut self) -> f64 {
        ((self.inner.next_u64() >> 12) as f64 + 0.5) * INV_2_52
    }

    pub fn exponential(&mut self) -> f64 {
        exponential_from_uniform(self.uniform())
    }
}

pub fn uniform01(stream: &RngStream, count: usize) -> Vec<f64> {
    let mut rng = stream.generator();
    (0..count).map(|_| rng.uniform()).collect()
}

fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::TooFewValues { min, got: n });
    }
    Ok(())
}

/// Pareto-type law `F(x) = 1 - C x^-alpha` on `x >= C^(1/alpha)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParetoModel {
    alpha: f64,
    c: f64,
}

impl ParetoModel {
    pub fn new(alpha: f64, c: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "alpha must be > 0, got {alpha}"
            )));
        }
        if !(c > 0.0 && c.is_finite()) {
            return Err(Error::InvalidParameter(format!("C must be > 0, got {c}")));
        }
        Ok(Self { alpha, c })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn support_lower_bound(&self) -> f64 {
        self.c.powf(1.0 / self.alpha)
    }

    pub fn tail(&self, x: f64) -> f64 {
        if x <= self.support_lower_bound() {
            1.0
        } else {
            self.c * x.powf(-self.alpha)
        }
    }

    pub fn cdf(&self, x: f64) -> f64 {
        1.0 - self.tail(x)
    }
}

/// `(C / (1 - u))^(1/alpha)` for `0 <= u < 1`.
pub fn pareto_inverse_cdf(u: f64, model: &ParetoModel) -> f64 {
    (model.c / (1.0 - u)).powf(1.0 / model.alpha)
}

pub fn sample_pareto(n: usize, model: &ParetoModel, stream: &RngStream) -> Result<RawSample> {
    check_n(n, 2)?;
    let mut rng = stream.generator();
    let values = (0..n)
        .map(|_| pareto_inverse_cdf(rng.uniform(), model))
        .collect();
    Ok(RawSample::from_trusted(values))
}

/// Strict Pareto quantiles with `C = 1`: a sample of size n whose order
/// statistics satisfy `X_{n-k:n} = (n/k)^(1/alpha)` for every `1 <= k < n`.
/// The maximum, which no finite quantile reaches, is set to `(2n)^(1/alpha)`.
pub fn pareto_quantile_sample(n: usize, alpha: f64) -> Result<OrderedSample> {
    check_n(n, 2)?;
    ParetoModel::new(alpha, 1.0)?;
    let nf = n as f64;
    let mut sorted: Vec<f64> = (1..n)
        .rev()
        .map(|k| {
            let kf = k as f64;
            (((nf - kf) / kf).ln_1p() / alpha).exp()
        })
        .collect();
    sorted.push(((2.0 * nf).ln() / alpha).exp());
    Ok(OrderedSample::from_sorted_trusted(sorted))
}

/// Second-order term of a Hall-class tail.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Perturbation {
    Zero,
    /// `coef * x^(-beta * (1 + margin))`; a positive margin keeps the term
    /// strictly smaller than `x^-beta`.
    Power {
        coef: f64,
        margin: f64,
    },
}

/// Default margin of [`Perturbation::Power`].
pub const DEFAULT_PERTURBATION_MARGIN: f64 = 0.1;

/// Relative bracket width at which numerical inversion stops.
pub const INVERSION_REL_TOL: f64 = 1e-12;

/// Tail `C x^-alpha (1 + p(x))` with `p` from [`Perturbation`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HallTailModel {
    alpha: f64,
    c: f64,
    beta: f64,
    perturbation: Perturbation,
    support: f64,
}

impl HallTailModel {
    pub fn new(alpha: f64, c: f64, beta: f64, perturbation: Perturbation) -> Result<Self> {
        let pareto = ParetoModel::new(alpha, c)?;
        if !(beta > 0.0 && beta.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "beta must be > 0, got {beta}"
            )));
        }
        let mut model = Self {
            alpha,
            c,
            beta,
            perturbation,
            support: pareto.support_lower_bound(),
        };
        if let Perturbation::Power { coef, margin } = perturbation {
            if !coef.is_finite() || !(margin >= 0.0 && margin.is_finite()) {
                return Err(Error::InvalidParameter(
                    "perturbation coefficient and margin must be finite, margin >= 0".into(),
                ));
            }
            if coef != 0.0 {
                model.support = model.find_support()?;
                model.check_monotone()?;
            }
        }
        Ok(model)
    }

    /// Unperturbed model.
    pub fn pareto(alpha: f64, c: f64, beta: f64) -> Result<Self> {
        Self::new(alpha, c, beta, Perturbation::Zero)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn perturbation(&self) -> Perturbation {
        self.perturbation
    }

    pub fn support_lower_bound(&self) -> f64 {
        self.support
    }

    fn exponent(&self) -> f64 {
        match self.perturbation {
            Perturbation::Zero => 0.0,
            Perturbation::Power { margin, .. } => self.beta * (1.0 + margin),
        }
    }

    /// The tail formula without truncation at the support.
    fn raw_tail(&self, x: f64) -> f64 {
        let base = self.c * x.powf(-self.alpha);
        match self.perturbation {
            Perturbation::Zero => base,
            Perturbation::Power { coef, .. } => base * (1.0 + coef * x.powf(-self.exponent())),
        }
    }

    /// `P(X > x)`.
    pub fn tail(&self, x: f64) -> f64 {
        if x <= self.support {
            1.0
        } else {
            self.raw_tail(x)
        }
    }

    fn find_support(&self) -> Result<f64> {
        let mut hi = ParetoModel::new(self.alpha, self.c)?.support_lower_bound();
        let mut lo = hi;
        if self.raw_tail(hi) >= 1.0 {
            for _ in 0..2048 {
                if self.raw_tail(hi) < 1.0 {
                    break;
                }
                lo = hi;
                hi *= 2.0;
            }
        } else {
            for _ in 0..2048 {
                if self.raw_tail(lo) >= 1.0 {
                    break;
                }
                let next = lo / 2.0;
                if !(self.raw_tail(next) > self.raw_tail(lo)) {
                    // the tail peaks below 1 somewhere left of lo
                    return Err(Error::NonMonotoneTail { x: lo });
                }
                hi = lo;
                lo = next;
            }
        }
        if !(self.raw_tail(lo) >= 1.0 && self.raw_tail(hi) < 1.0) {
            return Err(Error::NonMonotoneTail { x: lo });
        }
        Ok(bisect(lo, hi, |x| self.raw_tail(x) >= 1.0))
    }

    fn check_monotone(&self) -> Result<()> {
        let Perturbation::Power { coef, .. } = self.perturbation else {
            return Ok(());
        };
        let gamma = self.exponent();
        // d/dx tail < 0  <=>  alpha + coef (alpha + gamma) x^-gamma > 0; worst at the support
        if self.alpha + coef * (self.alpha + gamma) * self.support.powf(-gamma) <= 0.0 {
            return Err(Error::NonMonotoneTail { x: self.support });
        }
        let mut prev = self.raw_tail(self.support);
        for i in 1..=400 {
            let x = self.support * 10f64.powf(i as f64 * 0.03);
            let t = self.raw_tail(x);
            if !(t < prev) || t <= 0.0 {
                return Err(Error::NonMonotoneTail { x });
            }
            prev = t;
        }
        Ok(())
    }

    /// Solves `P(X > x) = t` for `0 < t <= 1`.
    pub fn inverse_tail(&self, t: f64) -> f64 {
        match self.perturbation {
            Perturbation::Zero => (self.c / t).powf(1.0 / self.alpha),
            Perturbation::Power { coef: 0.0, .. } => (self.c / t).powf(1.0 / self.alpha),
            Perturbation::Power { .. } => {
                if t >= 1.0 {
                    return self.support;
                }
                let mut hi = self.support.max((self.c / t).powf(1.0 / self.alpha));
                while self.raw_tail(hi) >= t {
                    hi *= 2.0;
                }
                bisect(self.support, hi, |x| self.raw_tail(x) >= t)
            }
        }
    }
}

/// Bisection for the boundary of a predicate that holds at `lo` and fails at `hi`.
fn bisect(mut lo: f64, mut hi: f64, holds: impl Fn(f64) -> bool) -> f64 {
    while hi - lo > INVERSION_REL_TOL * lo {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if holds(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Draws from a Hall-class tail. With zero perturbation the output is
/// bit-identical to [`sample_pareto`] on the same stream.
pub fn sample_hall(n: usize, model: &HallTailModel, stream: &RngStream) -> Result<RawSample> {
    check_n(n, 2)?;
    match model.perturbation {
        Perturbation::Zero => sample_pareto(n, &ParetoModel::new(model.alpha, model.c)?, stream),
        Perturbation::Power { .. } => {
            let mut rng = stream.generator();
            let values = (0..n)
                .map(|_| model.inverse_tail(1.0 - rng.uniform()))
                .collect();
            Ok(RawSample::from_trusted(values))
        }
    }
}

/// `-log(1 - u)`, strictly positive for `u` in (0, 1).
pub fn exponential_from_uniform(u: f64) -> f64 {
    -(-u).ln_1p()
}

/// Standard exponential draws.
pub fn sample_exponential(n: usize, stream: &RngStream) -> Result<Vec<f64>> {
    check_n(n, 1)?;
    let mut rng = stream.generator();
    Ok((0..n).map(|_| rng.exponential()).collect())
}

/// Partial sums `S_i = sum_{j=1}^{i} E_{n-j+1} / (n-j+1)` where the j-th draw
/// of the stream plays the role of `E_{n-j+1}`. Stops after `count` terms.
fn renyi_partial_sums(n: usize, count: usize, stream: &RngStream) -> Vec<f64> {
    let mut rng = stream.generator();
    let mut acc = 0.0;
    (1..=count)
        .map(|j| {
            acc += rng.exponential() / (n - j + 1) as f64;
            acc
        })
        .collect()
}

/// All n standard-exponential order statistics via Rényi's representation.
pub fn renyi_exponential_order_stats(n: usize, stream: &RngStream) -> Result<OrderedSample> {
    check_n(n, 2)?;
    Ok(OrderedSample::from_sorted_trusted(renyi_partial_sums(
        n, n, stream,
    )))
}

/// `E_{i:n}` alone; equal to element `i` of [`renyi_exponential_order_stats`]
/// on the same stream, without allocating the full vector.
pub fn renyi_order_statistic(n: usize, i: usize, stream: &RngStream) -> Result<f64> {
    check_n(n, 2)?;
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { i, n });
    }
    let mut rng = stream.generator();
    let mut acc = 0.0;
    for j in 1..=i {
        acc += rng.exponential() / (n - j + 1) as f64;
    }
    Ok(acc)
}

/// `e^m` with `m = ceil(-log u)`, so that `P(X > e^m) = e^-m`.
pub fn floor_log_from_uniform(u: f64) -> f64 {
    (-u.ln()).ceil().exp()
}

/// Draws from the tail `P(X > x) = e^-floor(log x)`, which lies in the class
/// with index -1 without being regularly varying.
pub fn sample_floor_log(n: usize, stream: &RngStream) -> Result<RawSample> {
    check_n(n, 2)?;
    let mut rng = stream.generator();
    let values = (0..n)
        .map(|_| floor_log_from_uniform(rng.uniform()))
        .collect();
    Ok(RawSample::from_trusted(values))
}
