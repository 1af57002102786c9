//! Tail-index estimation from a single upper order statistic.
//!
//! The crate is organised around the estimator
//! `alpha_hat(k) = (log(n/k) + log C) / log X_{n-k:n}` and what is needed to
//! check its behaviour empirically:
//!
//! - [`sample`]: sorted samples, order statistics, k-grids.
//! - [`estimators`]: the single-order-statistic estimator and its variants,
//!   Hill and the moment estimator, and k-series ("Hill plots").
//! - [`sampling`]: seeded streams and samplers (Pareto, Hall-class tails,
//!   exponentials, Rényi order statistics, the floor-log tail).
//! - [`mindex`]: numerical diagnostics for `log U(x) / log x -> eta`.
//! - [`stats`]: normal CDF, KS distances, summaries.
//! - [`experiments`]: the Monte Carlo harness.
//! - [`io`] and [`cli`]: CSV ingestion, series/report output, command line.

// negated comparisons reject NaN along with out-of-range values
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod estimators;
pub mod experiments;
pub mod io;
pub mod mindex;
pub mod sample;
pub mod sampling;
pub mod stats;

pub use error::{Error, Result};
