//! Summary statistics, the standard normal CDF and Kolmogorov-Smirnov distances.

use serde::{Deserialize, Serialize};
use std::f64::consts::SQRT_2;

/// Standard normal CDF, `Phi(z) = erfc(-z / sqrt 2) / 2`, using the libm
/// (FreeBSD msun) `erfc`, whose relative error is below 1e-15.
pub fn normal_cdf(z: f64) -> f64 {
    0.5 * libm::erfc(-z / SQRT_2)
}

fn sorted_copy(samples: &[f64]) -> Vec<f64> {
    let mut v = samples.to_vec();
    v.sort_by(f64::total_cmp);
    v
}

/// One-sample KS distance between `samples` and `N(location, scale^2)`.
///
/// Evaluated at both sides of every step of the empirical CDF:
/// `max_i max(i/m - F(x_i), F(x_i) - (i-1)/m)`.
pub fn ks_distance(samples: &[f64], location: f64, scale: f64) -> f64 {
    assert!(!samples.is_empty(), "ks_distance needs samples");
    assert!(scale > 0.0, "ks_distance needs a positive scale");
    ks_distance_to(samples, |x| normal_cdf((x - location) / scale))
}

/// One-sample KS distance against an arbitrary continuous CDF.
pub fn ks_distance_to(samples: &[f64], cdf: impl Fn(f64) -> f64) -> f64 {
    let sorted = sorted_copy(samples);
    let m = sorted.len() as f64;
    sorted.iter().enumerate().fold(0.0, |acc, (i, &x)| {
        let f = cdf(x);
        let above = (i + 1) as f64 / m - f;
        let below = f - i as f64 / m;
        acc.max(above).max(below)
    })
}

/// Two-sample KS distance `sup_x |F_a(x) - F_b(x)|`, exact with ties.
pub fn ks_two_sample(a: &[f64], b: &[f64]) -> f64 {
    assert!(
        !a.is_empty() && !b.is_empty(),
        "ks_two_sample needs samples"
    );
    let (a, b) = (sorted_copy(a), sorted_copy(b));
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let (mut i, mut j) = (0, 0);
    let mut d: f64 = 0.0;
    while i < a.len() && j < b.len() {
        let x = a[i].min(b[j]);
        while i < a.len() && a[i] <= x {
            i += 1;
        }
        while j < b.len() && b[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / na - j as f64 / nb).abs());
    }
    d
}

pub fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Unbiased sample variance; NaN for fewer than two values.
pub fn sample_variance(xs: &[f64]) -> f64 {
    if xs.len() < 2 {
        return f64::NAN;
    }
    let m = mean(xs);
    xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (xs.len() - 1) as f64
}

/// Linear-interpolation quantile (Hyndman-Fan type 7) of sorted data.
pub fn quantile_sorted(sorted: &[f64], p: f64) -> f64 {
    assert!(!sorted.is_empty());
    let h = (sorted.len() - 1) as f64 * p.clamp(0.0, 1.0);
    let lo = h.floor() as usize;
    let hi = h.ceil() as usize;
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}

/// Location and spread of a Monte Carlo sample.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub count: usize,
    pub mean: f64,
    pub variance: f64,
    pub median: f64,
    pub q05: f64,
    pub q95: f64,
}

impl Summary {
    pub fn of(xs: &[f64]) -> Self {
        let sorted = sorted_copy(xs);
        Self {
            count: xs.len(),
            mean: mean(xs),
            variance: sample_variance(xs),
            median: quantile_sorted(&sorted, 0.5),
            q05: quantile_sorted(&sorted, 0.05),
            q95: quantile_sorted(&sorted, 0.95),
        }
    }

    /// Width of the central 90% interval.
    pub fn spread(&self) -> f64 {
        self.q95 - self.q05
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Taylor series `Phi(z) = 1/2 + phi(z) * sum z^(2n+1) / (1*3*...*(2n+1))`,
    /// summed until the terms vanish; accurate for moderate |z|.
    fn phi_series(z: f64) -> f64 {
        let mut term = z;
        let mut sum = z;
        let mut n = 0.0;
        while term.abs() > 1e-18 {
            n += 1.0;
            term *= z * z / (2.0 * n + 1.0);
            sum += term;
        }
        0.5 + sum * (-z * z / 2.0).exp() / (2.0 * std::f64::consts::PI).sqrt()
    }

    fn normal_quantile(p: f64) -> f64 {
        let (mut lo, mut hi) = (-40.0, 40.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if normal_cdf(mid) < p {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn normal_cdf_reference_points() {
        assert_eq!(normal_cdf(0.0), 0.5);
        assert!((normal_cdf(10.0) - 1.0).abs() < 1e-7);
        assert!(normal_cdf(-10.0) < 1e-7);
        let oracle = phi_series(1.96);
        assert!((oracle - 0.9750021).abs() < 1e-7);
        assert!((normal_cdf(1.96) - 0.9750021).abs() < 1e-7);
        for z in [-4.0, -2.5, -1.0, -0.3, 0.7, 1.5, 3.0, 5.0] {
            assert!((normal_cdf(z) - phi_series(z)).abs() < 1e-12, "z={z}");
        }
    }

    #[test]
    fn ks_on_plotting_positions() {
        let m = 1000;
        let xs: Vec<f64> = (1..=m)
            .map(|i| normal_quantile((i as f64 - 0.5) / m as f64))
            .collect();
        let d = ks_distance(&xs, 0.0, 1.0);
        assert!(d <= 0.0005 + 0.5 / m as f64 + 1e-9, "{d}");
    }

    #[test]
    fn ks_single_median_sample() {
        assert!((ks_distance(&[0.0], 0.0, 1.0) - 0.5).abs() < 1e-15);
        assert!((ks_distance(&[3.0], 3.0, 2.0) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn ks_detects_scale_mismatch() {
        // sup |Phi(x) - Phi(x/2)| ~ 0.161 at x = sqrt(8 ln 2 / 3)
        let x = (8.0 * 2f64.ln() / 3.0).sqrt();
        let analytic = normal_cdf(x) - normal_cdf(x / 2.0);
        assert!(analytic > 0.16);
        let m = 4000;
        let xs: Vec<f64> = (1..=m)
            .map(|i| 2.0 * normal_quantile((i as f64 - 0.5) / m as f64))
            .collect();
        let d = ks_distance(&xs, 0.0, 1.0);
        assert!(d > 0.08);
        assert!((d - analytic).abs() < 0.01);
    }

    #[test]
    fn ks_two_sample_cases() {
        assert_eq!(
            ks_two_sample(&[1.0, 2.0, 3.0, 4.0], &[2.0, 1.0, 4.0, 3.0]),
            0.0
        );
        assert_eq!(
            ks_two_sample(&[1.0, 1.0, 4.0, 4.0], &[1.0, 1.0, 1.0, 4.0]),
            0.25
        );
        let xs = [0.42, 0.24, 0.86, 0.85, 0.82, 0.82, 0.25, 0.78, 0.13, 0.27];
        let ys = [0.24, 0.27, 0.87, 0.29, 0.57, 0.44, 0.5, 0.00, 0.56, 0.03];
        assert!((ks_two_sample(&xs, &ys) - 0.4).abs() < 1e-12);
        assert_eq!(ks_two_sample(&[1.0, 2.0], &[3.0, 4.0, 5.0]), 1.0);
    }

    #[test]
    fn summary_values() {
        let s = Summary::of(&[4.0, 1.0, 3.0, 2.0, 5.0]);
        assert_eq!(s.count, 5);
        assert_eq!(s.mean, 3.0);
        assert_eq!(s.variance, 2.5);
        assert_eq!(s.median, 3.0);
        assert!((s.q05 - 1.2).abs() < 1e-12);
        assert!((s.q95 - 4.8).abs() < 1e-12);

        let one = Summary::of(&[0.7]);
        assert_eq!((one.q05, one.median, one.q95), (0.7, 0.7, 0.7));
        assert!(one.variance.is_nan());
    }
}
