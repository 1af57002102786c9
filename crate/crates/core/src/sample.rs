//! Sample containers and order statistics.
//!
//! Order statistics use the 1-indexed convention `X_{1:n} <= ... <= X_{n:n}`;
//! storage is 0-indexed internally.

use serde::Serialize;

use crate::error::{Error, Result};

/// Unsorted positive observations.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RawSample {
    values: Vec<f64>,
}

impl RawSample {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        check_values(&values)?;
        Ok(Self { values })
    }

    /// Builds a sample without validation. Callers guarantee positivity.
    pub(crate) fn from_trusted(values: Vec<f64>) -> Self {
        debug_assert!(values.iter().all(|v| *v > 0.0 && v.is_finite()));
        Self { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    /// Sorts ascending into an [`OrderedSample`].
    pub fn sort(self) -> OrderedSample {
        let mut sorted = self.values;
        sorted.sort_by(f64::total_cmp);
        OrderedSample { sorted }
    }
}

fn check_values(values: &[f64]) -> Result<()> {
    if values.len() < 2 {
        return Err(Error::TooFewValues {
            min: 2,
            got: values.len(),
        });
    }
    if let Some(&bad) = values.iter().find(|v| !(**v > 0.0 && v.is_finite())) {
        return Err(Error::NonPositiveValue {
            value: bad,
            line: None,
        });
    }
    Ok(())
}

/// Validates and sorts raw values.
pub fn sort_sample(values: Vec<f64>) -> Result<OrderedSample> {
    Ok(RawSample::new(values)?.sort())
}

/// Ascending positive observations.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrderedSample {
    sorted: Vec<f64>,
}

impl OrderedSample {
    pub(crate) fn from_sorted_trusted(sorted: Vec<f64>) -> Self {
        debug_assert!(sorted.windows(2).all(|w| w[0] <= w[1]));
        Self { sorted }
    }

    pub fn n(&self) -> usize {
        self.sorted.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.sorted
    }

    pub fn min(&self) -> f64 {
        self.sorted[0]
    }

    pub fn max(&self) -> f64 {
        self.sorted[self.sorted.len() - 1]
    }

    /// `X_{i:n}`, the i-th smallest value (1-indexed).
    pub fn order_statistic(&self, i: usize) -> Result<f64> {
        let n = self.n();
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { i, n });
        }
        Ok(self.sorted[i - 1])
    }

    /// `X_{n-k:n}` for `0 <= k < n`.
    pub fn upper(&self, k: usize) -> f64 {
        self.sorted[self.n() - 1 - k]
    }

    /// The `k + 1` largest values in descending order: `X_{n:n}, ..., X_{n-k:n}`.
    pub(crate) fn top_descending(&self, k: usize) -> impl Iterator<Item = f64> + '_ {
        self.sorted[self.n() - 1 - k..].iter().rev().copied()
    }

    /// Fraction of observations strictly greater than `x`.
    pub fn empirical_tail(&self, x: f64) -> f64 {
        let not_above = self.sorted.partition_point(|v| *v <= x);
        (self.n() - not_above) as f64 / self.n() as f64
    }

    /// True when no two observations coincide.
    pub fn is_distinct(&self) -> bool {
        self.sorted.windows(2).all(|w| w[0] < w[1])
    }
}

/// Strictly increasing list of `k` values valid for a sample of size `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KGrid {
    ks: Vec<usize>,
}

/// Every k up to this value is kept in the standard grid.
pub const DENSE_K_LIMIT: usize = 100;
/// Growth factor of the sparse part of the standard grid.
pub const K_GROWTH: f64 = 1.05;

impl KGrid {
    pub fn new(ks: Vec<usize>, n: usize) -> Result<Self> {
        if ks.is_empty() {
            return Err(Error::InvalidParameter("empty k-grid".into()));
        }
        if let Some(w) = ks.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameter(format!(
                "k-grid not strictly increasing at {} -> {}",
                w[0], w[1]
            )));
        }
        for &k in &ks {
            if k == 0 || k >= n {
                return Err(Error::KOutOfRange { k, n, min: 1 });
            }
        }
        Ok(Self { ks })
    }

    /// Every k in `1..=n-1`.
    pub fn full(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewValues { min: 2, got: n });
        }
        Ok(Self {
            ks: (1..n).collect(),
        })
    }

    /// Dense up to [`DENSE_K_LIMIT`], then geometric with ratio [`K_GROWTH`].
    /// When `scale` is given, `round(n * scale)` is added if it lies in range,
    /// which keeps the zero crossing of the scaled estimator on the grid.
    pub fn standard(n: usize, scale: Option<f64>) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewValues { min: 2, got: n });
        }
        let last = n - 1;
        let mut ks: Vec<usize> = (1..=DENSE_K_LIMIT.min(last)).collect();
        let mut k = DENSE_K_LIMIT;
        loop {
            let next = ((k as f64 * K_GROWTH).round() as usize).max(k + 1);
            if next > last {
                break;
            }
            ks.push(next);
            k = next;
        }
        if let Some(c) = scale {
            let zero = (n as f64 * c).round();
            if zero >= 1.0 && zero <= last as f64 {
                ks.push(zero as usize);
            }
        }
        ks.sort_unstable();
        ks.dedup();
        Ok(Self { ks })
    }

    pub fn ks(&self) -> &[usize] {
        &self.ks
    }

    pub fn len(&self) -> usize {
        self.ks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ks.is_empty()
    }

    pub fn max(&self) -> usize {
        *self.ks.last().expect("grid is never empty")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorts_ascending_and_keeps_duplicates() {
        assert_eq!(
            sort_sample(vec![3.0, 1.0, 2.0]).unwrap().as_slice(),
            &[1.0, 2.0, 3.0]
        );
        assert_eq!(
            sort_sample(vec![5.0, 5.0, 5.0]).unwrap().as_slice(),
            &[5.0, 5.0, 5.0]
        );
    }

    #[test]
    fn rejects_bad_values() {
        assert!(matches!(
            sort_sample(vec![1.0, 0.0]),
            Err(Error::NonPositiveValue { value, .. }) if value == 0.0
        ));
        assert!(matches!(
            sort_sample(vec![1.0, -2.0, 3.0]),
            Err(Error::NonPositiveValue { .. })
        ));
        assert!(sort_sample(vec![1.0, f64::NAN]).is_err());
        assert!(sort_sample(vec![1.0, f64::INFINITY]).is_err());
        assert!(matches!(
            sort_sample(vec![1.0]),
            Err(Error::TooFewValues { .. })
        ));
    }

    #[test]
    fn order_statistics_are_one_indexed() {
        let os = sort_sample(vec![2.0, 3.0, 1.0]).unwrap();
        assert_eq!(os.order_statistic(3).unwrap(), 3.0);
        assert_eq!(os.order_statistic(1).unwrap(), 1.0);
        assert!(matches!(
            os.order_statistic(0),
            Err(Error::IndexOutOfRange { i: 0, n: 3 })
        ));
        assert!(os.order_statistic(4).is_err());
        assert_eq!(os.upper(0), 3.0);
        assert_eq!(os.upper(2), 1.0);
    }

    #[test]
    fn empirical_tail_counts_strict_exceedances() {
        let os = sort_sample(vec![1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_eq!(os.empirical_tail(2.5), 0.5);
        assert_eq!(os.empirical_tail(2.0), 0.5);
        assert_eq!(os.empirical_tail(4.0), 0.0);
        assert_eq!(os.empirical_tail(100.0), 0.0);
        assert_eq!(os.empirical_tail(0.5), 1.0);
    }

    #[test]
    fn empirical_tail_with_ties() {
        let os = sort_sample(vec![1.0, 2.0, 2.0, 2.0, 5.0]).unwrap();
        assert_eq!(os.empirical_tail(2.0), 0.2);
        assert!(!os.is_distinct());
    }

    #[test]
    fn top_descending_includes_threshold() {
        let os = sort_sample(vec![1.0, 4.0, 2.0, 3.0]).unwrap();
        let top: Vec<f64> = os.top_descending(2).collect();
        assert_eq!(top, vec![4.0, 3.0, 2.0]);
    }

    #[test]
    fn grid_validation() {
        assert!(KGrid::new(vec![1, 2, 3], 4).is_ok());
        assert!(KGrid::new(vec![1, 2, 4], 4).is_err());
        assert!(KGrid::new(vec![0, 2], 4).is_err());
        assert!(KGrid::new(vec![2, 2], 4).is_err());
        assert!(KGrid::new(vec![], 4).is_err());
        assert_eq!(KGrid::full(4).unwrap().ks(), &[1, 2, 3]);
    }

    #[test]
    fn standard_grid_shape() {
        let g = KGrid::standard(50, None).unwrap();
        assert_eq!(g.ks(), (1..50).collect::<Vec<_>>().as_slice());

        let g = KGrid::standard(100_000, None).unwrap();
        assert_eq!(&g.ks()[..100], (1..=100).collect::<Vec<_>>().as_slice());
        assert!(g.max() < 100_000);
        assert!(g.ks().windows(2).all(|w| w[0] < w[1]));
        // geometric tail keeps the grid small
        assert!(g.len() < 250, "{}", g.len());
        // the last step is within one growth factor of n
        assert!(g.max() as f64 * K_GROWTH * K_GROWTH > 99_999.0);

        let g = KGrid::standard(1000, Some(0.1)).unwrap();
        assert!(g.ks().contains(&100));
        let g = KGrid::standard(100_000, Some(0.1)).unwrap();
        assert!(g.ks().contains(&10_000));
        // k = n*C = n is out of range and silently skipped
        let g = KGrid::standard(1000, Some(1.0)).unwrap();
        assert!(g.max() < 1000);
    }
}
