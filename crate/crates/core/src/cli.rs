//! Command line interface.
//!
//! Exit codes: 0 success or passing suite, 1 usage, parse or input error,
//! 2 failing or inconclusive suite, 3 degenerate data.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::estimators::{estimate_series, EstimateSeries, Estimator};
use crate::experiments::{
    consistency_experiment, consistency_verdict, lemma2_experiment, normality_experiment,
    normality_verdict, simulation_grid, Engine, GridSpec, KRule, ReplicationPlan, SamplingMethod,
    SuiteStatus, TailModel, Verdict,
};
use crate::io::{
    ingest_csv, mindex_csv, read_tabulated_function, write_json, write_series, Column, DatasetSpec,
    RunManifest, MANIFEST_FILE,
};
use crate::mindex::{
    check_sandwich, estimate_m_index_with, exponent_grid, geometric_grid, MFunction,
    DEFAULT_DRIFT_TOLERANCE, DEFAULT_GRID_MAX, DEFAULT_GRID_MIN, DEFAULT_GRID_POINTS,
};
use crate::sampling::{HallTailModel, ParetoModel, Perturbation, DEFAULT_PERTURBATION_MARGIN};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_SUITE_FAILED: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;

/// Seed used when neither `--seed` nor `TAILIX_SEED` is given.
pub const DEFAULT_SEED: u64 = 1;

#[derive(Debug, Parser, Serialize)]
#[command(
    name = "tailix",
    version,
    about = "Tail-index estimation and Monte Carlo checks"
)]
pub struct Cli {
    /// Worker threads for experiments (default: all cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Estimate the tail index of a data column over a k-grid.
    Estimate(EstimateArgs),
    /// Write estimator series for a grid of simulated Pareto samples.
    Simulate(SimulateArgs),
    /// Distribution of the standardized statistic T under a Hall-class tail.
    Normality(NormalityArgs),
    /// Median error of 1/alpha_hat as n grows.
    Consistency(ConsistencyArgs),
    /// Distribution of sqrt(k) (E_{n-k:n} - log(n/k)) for exponential samples.
    Lemma2(Lemma2Args),
    /// Numerical index diagnostics for log U(x) / log x.
    Mindex(MindexArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EstimatorKind {
    Cadena,
    CadenaScaled,
    Shift,
    Average,
    Hill,
    HillRecip,
    Moment,
    MomentRecip,
}

#[derive(Debug, Args, Serialize)]
pub struct SeedArg {
    /// Base seed of all random streams.
    #[arg(long, env = "TAILIX_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Args, Serialize)]
pub struct EstimateArgs {
    /// CSV file with the observations.
    #[arg(long)]
    pub input: PathBuf,
    /// 0-based column index or header name.
    #[arg(long, default_value = "0")]
    pub column: String,
    #[arg(long, default_value_t = ',')]
    pub delimiter: char,
    /// Whether the first row is a header (default: detect).
    #[arg(long)]
    pub header: Option<bool>,
    /// Keep only values at or above this threshold.
    #[arg(long)]
    pub threshold: Option<f64>,
    #[arg(
        long,
        value_enum,
        value_delimiter = ',',
        default_value = "cadena-scaled,hill-recip,moment-recip"
    )]
    pub estimator: Vec<EstimatorKind>,
    /// Scale C of the scaled estimator.
    #[arg(long = "C", default_value_t = 1.0)]
    pub c: f64,
    /// C1 of the shift variant.
    #[arg(long)]
    pub c1: Option<f64>,
    /// C2 of the shift variant.
    #[arg(long)]
    pub c2: Option<f64>,
    /// Window of the average variant: k..=k+span.
    #[arg(long)]
    pub span: Option<usize>,
    /// A single k.
    #[arg(long, conflicts_with = "k_grid")]
    pub k: Option<usize>,
    /// standard | full | power:DELTA | fractions:F1,F2,... | K1,K2,...
    #[arg(long, value_parser = parse_k_rule)]
    pub k_grid: Option<KRule>,
    #[arg(long)]
    pub out_dir: PathBuf,
}

#[derive(Debug, Args, Serialize)]
pub struct SimulateArgs {
    #[arg(long, value_delimiter = ',', default_value = "0.1,1,1.5")]
    pub alpha: Vec<f64>,
    #[arg(long = "C", value_delimiter = ',', default_value = "0.1,1,10")]
    pub c: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_value = "1000,10000,100000")]
    pub n: Vec<usize>,
    /// standard | full | power:DELTA | fractions:F1,F2,... | K1,K2,...
    #[arg(long, value_parser = parse_k_rule, default_value = "standard")]
    pub k_grid: KRule,
    #[command(flatten)]
    pub seed: SeedArg,
    #[arg(long)]
    pub out_dir: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MethodArg {
    Full,
    Renyi,
}

#[derive(Debug, Args, Serialize)]
pub struct NormalityArgs {
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    #[arg(long = "C", default_value_t = 1.0)]
    pub c: f64,
    /// Second-order exponent of the tail.
    #[arg(long, default_value_t = 1.0)]
    pub beta: f64,
    /// Coefficient of the second-order term (0: exact Pareto).
    #[arg(long, default_value_t = 0.0)]
    pub coef: f64,
    /// The second-order term decays like x^-(beta (1 + margin)).
    #[arg(long, default_value_t = DEFAULT_PERTURBATION_MARGIN)]
    pub margin: f64,
    #[arg(long, default_value_t = 100_000)]
    pub n: usize,
    #[arg(long, default_value_t = 1_000)]
    pub k: usize,
    #[arg(long, default_value_t = 1_000)]
    pub replications: usize,
    /// full: sort whole samples; renyi: draw the order statistic directly.
    #[arg(long, value_enum, default_value = "full")]
    pub method: MethodArg,
    #[command(flatten)]
    pub seed: SeedArg,
    #[arg(long)]
    pub out_dir: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelArg {
    Pareto,
    FloorLog,
}

#[derive(Debug, Args, Serialize)]
pub struct ConsistencyArgs {
    #[arg(long, value_enum, default_value = "pareto")]
    pub model: ModelArg,
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    #[arg(long = "C", default_value_t = 1.0)]
    pub c: f64,
    #[arg(long, value_delimiter = ',', default_value = "1000,10000,100000")]
    pub n: Vec<usize>,
    /// k = floor(n^delta).
    #[arg(long, conflicts_with = "fraction")]
    pub delta: Option<f64>,
    /// k = floor(fraction * n).
    #[arg(long)]
    pub fraction: Option<f64>,
    #[arg(long, default_value_t = 50)]
    pub replications: usize,
    #[command(flatten)]
    pub seed: SeedArg,
    #[arg(long)]
    pub out_dir: PathBuf,
}

#[derive(Debug, Args, Serialize)]
pub struct Lemma2Args {
    #[arg(long, default_value_t = 100_000)]
    pub n: usize,
    #[arg(long, default_value_t = 316)]
    pub k: usize,
    #[arg(long, default_value_t = 2_000)]
    pub replications: usize,
    #[command(flatten)]
    pub seed: SeedArg,
    #[arg(long)]
    pub out_dir: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FunctionArg {
    /// a * x^eta
    Power,
    /// e^-floor(log x), evaluated on x = e^1, ..., e^points
    FloorLog,
    /// x^eta log x
    PowerLog,
    /// x^eta (2 + sin x)
    Oscillating,
    /// e^x
    Exp,
}

#[derive(Debug, Args, Serialize)]
pub struct MindexArgs {
    #[arg(
        long,
        value_enum,
        conflicts_with = "table",
        required_unless_present = "table"
    )]
    pub function: Option<FunctionArg>,
    /// Two-column CSV of x, U(x) with x > 1.
    #[arg(long)]
    pub table: Option<PathBuf>,
    #[arg(long, default_value_t = ',')]
    pub delimiter: char,
    #[arg(long)]
    pub header: Option<bool>,
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    #[arg(long, default_value_t = 1.5)]
    pub eta: f64,
    #[arg(long, default_value_t = DEFAULT_GRID_MIN)]
    pub grid_min: f64,
    #[arg(long, default_value_t = DEFAULT_GRID_MAX)]
    pub grid_max: f64,
    #[arg(long, default_value_t = DEFAULT_GRID_POINTS)]
    pub points: usize,
    #[arg(long, default_value_t = DEFAULT_DRIFT_TOLERANCE)]
    pub drift_tolerance: f64,
    /// Also check the x^(index +- epsilon) sandwich around the estimated index.
    #[arg(long)]
    pub epsilon: Option<f64>,
    #[arg(long)]
    pub out_dir: PathBuf,
}

/// Parses `standard`, `full`, `power:D`, `fractions:F,...` or a list of k values.
pub fn parse_k_rule(s: &str) -> std::result::Result<KRule, String> {
    let list = |t: &str| -> std::result::Result<Vec<f64>, String> {
        t.split(',')
            .map(|x| {
                x.trim()
                    .parse::<f64>()
                    .map_err(|_| format!("not a number: {x:?}"))
            })
            .collect()
    };
    let rule = match s.trim() {
        "standard" => KRule::Standard,
        "full" => KRule::Full,
        t => {
            if let Some(d) = t.strip_prefix("power:") {
                KRule::Power {
                    delta: d.trim().parse().map_err(|_| format!("bad delta {d:?}"))?,
                }
            } else if let Some(f) = t.strip_prefix("fractions:") {
                KRule::Fractions {
                    fractions: list(f)?,
                }
            } else {
                let ks = t
                    .split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<usize>()
                            .map_err(|_| format!("bad k {x:?}"))
                    })
                    .collect::<std::result::Result<Vec<_>, _>>()?;
                KRule::List { ks }
            }
        }
    };
    rule.validate().map_err(|e| e.to_string())?;
    Ok(rule)
}

pub fn exit_code(err: &Error) -> i32 {
    if err.is_degenerate() {
        EXIT_DEGENERATE
    } else {
        EXIT_USAGE
    }
}

fn status_code(status: SuiteStatus) -> i32 {
    match status {
        SuiteStatus::Pass => EXIT_OK,
        SuiteStatus::Fail | SuiteStatus::Inconclusive => EXIT_SUITE_FAILED,
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn execute(cli: &Cli) -> Result<i32> {
    let engine = Engine::new(cli.workers)?;
    match &cli.command {
        Command::Estimate(a) => cmd_estimate(a),
        Command::Simulate(a) => cmd_simulate(a, &engine),
        Command::Normality(a) => cmd_normality(a, &engine),
        Command::Consistency(a) => cmd_consistency(a, &engine),
        Command::Lemma2(a) => cmd_lemma2(a, &engine),
        Command::Mindex(a) => cmd_mindex(a),
    }
}

fn delimiter_byte(c: char) -> Result<u8> {
    u8::try_from(c)
        .ok()
        .filter(u8::is_ascii)
        .ok_or_else(|| Error::InvalidParameter(format!("delimiter must be ASCII, got {c:?}")))
}

fn estimator_from(kind: EstimatorKind, a: &EstimateArgs) -> Result<Estimator> {
    let need = |v: Option<f64>, name: &str| {
        v.ok_or_else(|| {
            Error::InvalidParameter(format!("--{name} is required for the shift variant"))
        })
    };
    Ok(match kind {
        EstimatorKind::Cadena => Estimator::Cadena,
        EstimatorKind::CadenaScaled => Estimator::CadenaScaled { c: a.c },
        EstimatorKind::Shift => Estimator::Shift {
            c1: need(a.c1, "c1")?,
            c2: need(a.c2, "c2")?,
        },
        EstimatorKind::Average => Estimator::Average {
            span: a.span.ok_or_else(|| {
                Error::InvalidParameter("--span is required for the average variant".into())
            })?,
        },
        EstimatorKind::Hill => Estimator::Hill,
        EstimatorKind::HillRecip => Estimator::HillRecip,
        EstimatorKind::Moment => Estimator::Moment,
        EstimatorKind::MomentRecip => Estimator::MomentRecip,
    })
}

fn create_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir)?;
    Ok(())
}

fn finish(dir: &Path, mut manifest: RunManifest, outputs: Vec<String>) -> Result<()> {
    manifest.outputs = outputs;
    write_json(&dir.join(MANIFEST_FILE), &manifest)?;
    println!("wrote {}", dir.join(MANIFEST_FILE).display());
    Ok(())
}

fn cmd_estimate(a: &EstimateArgs) -> Result<i32> {
    let spec = DatasetSpec {
        path: a.input.clone(),
        column: Column::parse(&a.column),
        delimiter: delimiter_byte(a.delimiter)?,
        header: a.header,
        threshold: a.threshold,
    };
    let data = ingest_csv(&spec)?;
    println!("rows {}, kept {}", data.rows, data.kept);
    let os = data.sample.sort();
    let grid = match (a.k, &a.k_grid) {
        (Some(k), _) => KRule::List { ks: vec![k] }.grid(os.n(), None)?,
        (None, Some(rule)) => rule.grid(os.n(), Some(a.c))?,
        (None, None) => KRule::Standard.grid(os.n(), Some(a.c))?,
    };
    let mut kinds = a.estimator.clone();
    kinds.dedup();
    let series = kinds
        .iter()
        .map(|&kind| estimate_series(&os, estimator_from(kind, a)?, &grid))
        .collect::<Result<Vec<_>>>()?;
    if let Some(empty) = series.iter().find(|s| s.defined_count() == 0) {
        eprintln!("{}: undefined at every k", empty.estimator_tag);
        return Err(Error::DegenerateDenominator { k: grid.max() });
    }
    create_dir(&a.out_dir)?;
    let mut outputs = Vec::new();
    for s in &series {
        let name = format!("series_{}.csv", s.estimator_tag);
        write_series(&a.out_dir.join(&name), s)?;
        println!("wrote {}", a.out_dir.join(&name).display());
        outputs.push(name);
    }
    finish(&a.out_dir, RunManifest::new("estimate", a, None)?, outputs)?;
    Ok(EXIT_OK)
}

/// `cell_a{alpha}_C{C}_n{n}_{tag}.csv`
pub fn cell_file_name(alpha: f64, c: f64, n: usize, series: &EstimateSeries) -> String {
    format!("cell_a{alpha}_C{c}_n{n}_{}.csv", series.estimator_tag)
}

fn cmd_simulate(a: &SimulateArgs, engine: &Engine) -> Result<i32> {
    let spec = GridSpec {
        alphas: a.alpha.clone(),
        cs: a.c.clone(),
        ns: a.n.clone(),
        k_rule: a.k_grid.clone(),
        replications: 1,
        base_seed: a.seed.seed,
    };
    let cells = simulation_grid(&spec, engine)?;
    create_dir(&a.out_dir)?;
    let mut outputs = Vec::new();
    for cell in &cells {
        for s in &cell.series {
            let name = cell_file_name(cell.alpha, cell.c, cell.n, s);
            write_series(&a.out_dir.join(&name), s)?;
            outputs.push(name);
        }
    }
    println!(
        "wrote {} series files for {} cells",
        outputs.len(),
        cells.len()
    );
    finish(
        &a.out_dir,
        RunManifest::new("simulate", a, Some(a.seed.seed))?,
        outputs,
    )?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct SuiteReport<'a, T: Serialize> {
    result: &'a T,
    verdict: &'a Verdict,
}

fn print_verdict(name: &str, verdict: &Verdict) {
    for c in &verdict.checks {
        let range = if c.lower == f64::NEG_INFINITY {
            format!("< {}", c.upper)
        } else {
            format!("in [{}, {}]", c.lower, c.upper)
        };
        println!(
            "{} {name} {}: {} {range} ({})",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            c.value,
            c.derivation
        );
    }
    if let Some(note) = &verdict.note {
        println!("note: {note}");
    }
    println!("{name}: {:?}", verdict.status);
}

fn write_report<T: Serialize>(
    dir: &Path,
    name: &str,
    result: &T,
    verdict: &Verdict,
    manifest: RunManifest,
) -> Result<i32> {
    create_dir(dir)?;
    let file = format!("{name}.json");
    write_json(&dir.join(&file), &SuiteReport { result, verdict })?;
    println!("wrote {}", dir.join(&file).display());
    finish(dir, manifest, vec![file])?;
    print_verdict(name, verdict);
    Ok(status_code(verdict.status))
}

fn cmd_normality(a: &NormalityArgs, engine: &Engine) -> Result<i32> {
    let perturbation = if a.coef == 0.0 {
        Perturbation::Zero
    } else {
        Perturbation::Power {
            coef: a.coef,
            margin: a.margin,
        }
    };
    let model = HallTailModel::new(a.alpha, a.c, a.beta, perturbation)?;
    let plan = ReplicationPlan::new(a.n, a.k, a.replications, a.seed.seed)?;
    let method = match a.method {
        MethodArg::Full => SamplingMethod::Full,
        MethodArg::Renyi => SamplingMethod::Renyi,
    };
    let result = normality_experiment(&model, plan, method, engine)?;
    if let Some(ks) = result.ks_distance_vs_inverse_scale {
        println!("ks distance vs N(0, alpha^-2): {ks}");
    }
    let verdict = normality_verdict(&result);
    let manifest = RunManifest::new("normality", a, Some(a.seed.seed))?;
    write_report(&a.out_dir, "normality", &result, &verdict, manifest)
}

fn cmd_consistency(a: &ConsistencyArgs, engine: &Engine) -> Result<i32> {
    let model = match a.model {
        ModelArg::Pareto => TailModel::Pareto(ParetoModel::new(a.alpha, a.c)?),
        ModelArg::FloorLog => TailModel::FloorLog,
    };
    let k_rule = match (a.delta, a.fraction) {
        (_, Some(f)) => KRule::Fractions { fractions: vec![f] },
        (d, None) => KRule::Power {
            delta: d.unwrap_or(0.5),
        },
    };
    let spec = GridSpec {
        alphas: vec![model.target_alpha()],
        cs: vec![model.scale()],
        ns: a.n.clone(),
        k_rule,
        replications: a.replications,
        base_seed: a.seed.seed,
    };
    spec.validate()?;
    let curve = consistency_experiment(&model, &spec, engine)?;
    for p in &curve.points {
        println!("n {} k {} median error {}", p.n, p.k, p.median_error);
    }
    let verdict = consistency_verdict(&curve);
    let manifest = RunManifest::new("consistency", a, Some(a.seed.seed))?;
    write_report(&a.out_dir, "consistency", &curve, &verdict, manifest)
}

fn cmd_lemma2(a: &Lemma2Args, engine: &Engine) -> Result<i32> {
    let plan = ReplicationPlan::new(a.n, a.k, a.replications, a.seed.seed)?;
    let result = lemma2_experiment(plan, engine)?;
    let verdict = normality_verdict(&result);
    let manifest = RunManifest::new("lemma2", a, Some(a.seed.seed))?;
    write_report(&a.out_dir, "lemma2", &result, &verdict, manifest)
}

fn cmd_mindex(a: &MindexArgs) -> Result<i32> {
    let (f, grid) = match (&a.table, a.function) {
        (Some(path), _) => read_tabulated_function(path, delimiter_byte(a.delimiter)?, a.header)?,
        (None, Some(kind)) => {
            let grid = geometric_grid(a.grid_min, a.grid_max, a.points)?;
            match kind {
                FunctionArg::Power => (MFunction::power(a.a, a.eta), grid),
                FunctionArg::FloorLog => (MFunction::floor_log(), exponent_grid(a.points)),
                FunctionArg::PowerLog => (MFunction::power_log(a.eta), grid),
                FunctionArg::Oscillating => (MFunction::oscillating(a.eta), grid),
                FunctionArg::Exp => (MFunction::exponential(), grid),
            }
        }
        (None, None) => {
            return Err(Error::InvalidParameter("give --function or --table".into()));
        }
    };
    let diag = estimate_m_index_with(&f, &grid, a.drift_tolerance)?;
    let sandwich = a
        .epsilon
        .map(|eps| check_sandwich(&f, diag.estimated_index, eps, &grid))
        .transpose()?;
    println!(
        "{}: estimated index {}, extrapolated {}, drift {}{}",
        diag.label,
        diag.estimated_index,
        diag.extrapolated_index,
        diag.drift,
        if diag.drifting { " (drifting)" } else { "" }
    );
    if let Some(s) = &sandwich {
        println!(
            "sandwich at +/- {}: consistent = {}",
            s.epsilon,
            s.consistent()
        );
    }
    create_dir(&a.out_dir)?;
    fs::write(a.out_dir.join("mindex.csv"), mindex_csv(&diag))?;
    #[derive(Serialize)]
    struct Report<'a> {
        diagnostic: &'a crate::mindex::MIndexDiagnostic,
        sandwich: Option<crate::mindex::SandwichReport>,
    }
    write_json(
        &a.out_dir.join("mindex.json"),
        &Report {
            diagnostic: &diag,
            sandwich,
        },
    )?;
    finish(
        &a.out_dir,
        RunManifest::new("mindex", a, None)?,
        vec!["mindex.csv".into(), "mindex.json".into()],
    )?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_valid() {
        Cli::command().debug_assert();
    }

    #[test]
    fn k_rule_syntax() {
        assert_eq!(parse_k_rule("standard").unwrap(), KRule::Standard);
        assert_eq!(
            parse_k_rule("power:0.5").unwrap(),
            KRule::Power { delta: 0.5 }
        );
        assert_eq!(
            parse_k_rule("fractions:0.01,0.1").unwrap(),
            KRule::Fractions {
                fractions: vec![0.01, 0.1]
            }
        );
        assert_eq!(
            parse_k_rule("1,5,10").unwrap(),
            KRule::List { ks: vec![1, 5, 10] }
        );
        assert!(parse_k_rule("power:1.5").is_err());
        assert!(parse_k_rule("x").is_err());
    }

    #[test]
    fn file_names() {
        let s = EstimateSeries {
            estimator_tag: "hill".into(),
            params: Estimator::Hill,
            n: 1000,
            points: vec![],
        };
        assert_eq!(
            cell_file_name(1.0, 0.1, 1000, &s),
            "cell_a1_C0.1_n1000_hill.csv"
        );
        assert_eq!(
            cell_file_name(1.5, 10.0, 100000, &s),
            "cell_a1.5_C10_n100000_hill.csv"
        );
    }

    #[test]
    fn usage_errors_exit_with_one() {
        assert_eq!(run(["tailix", "nope"]), EXIT_USAGE);
        assert_eq!(run(["tailix", "--version"]), EXIT_OK);
    }
}
