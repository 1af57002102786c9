use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An observation was zero, negative or not a finite number.
    #[error("non-positive value {value}{}", line_suffix(*line))]
    NonPositiveValue { value: f64, line: Option<u64> },

    #[error("sample needs at least {min} values, got {got}")]
    TooFewValues { min: usize, got: usize },

    #[error("order statistic index {i} out of range 1..={n}")]
    IndexOutOfRange { i: usize, n: usize },

    #[error("k = {k} out of range for n = {n} (need {min} <= k <= n-1)")]
    KOutOfRange { k: usize, n: usize, min: usize },

    /// The denominator of a ratio estimator vanished at this k.
    #[error("degenerate denominator at k = {k}")]
    DegenerateDenominator { k: usize },

    #[error("degenerate moments at k = {k} (M2 = 0 or M1^2 = M2)")]
    DegenerateMoments { k: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("perturbed tail is not monotone near x = {x}")]
    NonMonotoneTail { x: f64 },

    #[error("domain error at x = {x}: {reason}{}", line_suffix(*line))]
    Domain {
        x: f64,
        reason: String,
        line: Option<u64>,
    },

    #[error("{degenerate} of {total} replications were degenerate (limit 1%)")]
    TooManyDegenerate { degenerate: usize, total: usize },

    #[error("parse error on line {line}: {message}")]
    Parse { line: u64, message: String },

    #[error("only {kept} values left after filtering (need at least 2)")]
    EmptyAfterFilter { kept: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn line_suffix(line: Option<u64>) -> String {
    match line {
        Some(l) => format!(" on line {l}"),
        None => String::new(),
    }
}

impl Error {
    /// True for errors that come from degenerate data rather than bad input.
    pub fn is_degenerate(&self) -> bool {
        matches!(
            self,
            Error::DegenerateDenominator { .. }
                | Error::DegenerateMoments { .. }
                | Error::TooManyDegenerate { .. }
        )
    }
}
