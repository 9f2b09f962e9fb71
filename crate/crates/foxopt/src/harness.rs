//! Batch experiment harness: runs seeded optimizer batches over problem
//! suites, aggregates summary statistics, ranks, and pairwise significance
//! tests, and writes the lot to CSV and JSON.

use std::fs;
use std::io::{BufRead, BufReader};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use crate::core::{Error, Problem, Result, RunConfig, RunRecord};
use crate::engineering::PenaltyConfig;
use crate::fox::fox_run;
use crate::mfox::mfox_run;
use crate::registry::{lookup, suite};
use crate::stats::{competition_rank, fractional_rank, summarize, wilcoxon_ranksum};

/// The optimizers the harness can dispatch to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Mfox,
    Fox,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Mfox => "mfox",
            Algorithm::Fox => "fox",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "mfox" => Ok(Algorithm::Mfox),
            "fox" => Ok(Algorithm::Fox),
            other => Err(Error::UnknownAlgorithm(other.to_string())),
        }
    }

    pub fn run(self, problem: &dyn Problem, config: &RunConfig) -> Result<RunRecord> {
        match self {
            Algorithm::Mfox => mfox_run(problem, config),
            Algorithm::Fox => fox_run(problem, config),
        }
    }
}

/// Parses a comma-separated algorithm list such as `mfox,fox`.
pub fn parse_algorithms(s: &str) -> Result<Vec<Algorithm>> {
    let algorithms: Vec<Algorithm> = s
        .split(',')
        .filter(|part| !part.trim().is_empty())
        .map(Algorithm::parse)
        .collect::<Result<_>>()?;
    if algorithms.is_empty() {
        return Err(Error::UnknownAlgorithm(s.to_string()));
    }
    Ok(algorithms)
}

/// Ranking scheme used in summary tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RankMethod {
    /// Ties share the minimum rank and the next distinct value skips ahead.
    Competition,
    /// Ties share the average of the ranks they occupy.
    Fractional,
}

impl RankMethod {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "competition" => Ok(RankMethod::Competition),
            "fractional" => Ok(RankMethod::Fractional),
            other => Err(Error::InvalidConfig(format!(
                "unknown rank method `{other}`; expected competition or fractional"
            ))),
        }
    }
}

/// Full description of a batch experiment.
///
/// Run `k` uses seed `base_seed + k`, so any row of the outputs can be
/// reproduced from this config alone.
#[derive(Debug, Clone, Serialize)]
pub struct ExperimentConfig {
    pub algorithms: Vec<Algorithm>,
    pub problems: Vec<String>,
    pub runs: usize,
    pub pop: usize,
    pub max_iterations: usize,
    pub fe_budget: Option<usize>,
    pub base_seed: u64,
    #[serde(skip)]
    pub output_dir: PathBuf,
    pub penalty: PenaltyConfig,
    #[serde(skip)]
    pub parallel: usize,
    pub rank_method: RankMethod,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            algorithms: vec![Algorithm::Mfox, Algorithm::Fox],
            problems: suite("classical").expect("classical suite exists"),
            runs: 30,
            pop: 30,
            max_iterations: 1000,
            fe_budget: Some(30_000),
            base_seed: 0,
            output_dir: PathBuf::from("results"),
            penalty: PenaltyConfig::default(),
            parallel: 1,
            rank_method: RankMethod::Competition,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.algorithms.is_empty() {
            return Err(Error::InvalidConfig("no algorithms selected".into()));
        }
        if self.problems.is_empty() {
            return Err(Error::InvalidConfig("no problems selected".into()));
        }
        if self.runs < 1 {
            return Err(Error::InvalidConfig("runs must be at least 1".into()));
        }
        if self.parallel < 1 {
            return Err(Error::InvalidConfig("parallel must be at least 1".into()));
        }
        self.run_config(0).validate()
    }

    /// Per-run settings for run index `k`.
    pub fn run_config(&self, k: usize) -> RunConfig {
        RunConfig {
            pop: self.pop,
            max_iterations: self.max_iterations,
            fe_budget: self.fe_budget,
            seed: self.base_seed + k as u64,
        }
    }

    /// Applies one `key=value` setting; keys match the CLI flag names.
    pub fn apply(&mut self, key: &str, value: &str) -> Result<()> {
        let bad = |what: &str| Error::InvalidConfig(format!("invalid {what} value `{value}`"));
        match key {
            "algo" => self.algorithms = parse_algorithms(value)?,
            "suite" => self.problems = suite(value)?,
            "runs" => self.runs = value.parse().map_err(|_| bad("runs"))?,
            "pop" => self.pop = value.parse().map_err(|_| bad("pop"))?,
            "iters" => self.max_iterations = value.parse().map_err(|_| bad("iters"))?,
            "fes" => {
                let fes: usize = value.parse().map_err(|_| bad("fes"))?;
                self.fe_budget = if fes == 0 { None } else { Some(fes) };
            }
            "seed" => self.base_seed = value.parse().map_err(|_| bad("seed"))?,
            "out" => self.output_dir = PathBuf::from(value),
            "parallel" => self.parallel = value.parse().map_err(|_| bad("parallel"))?,
            "penalty_coefficient" => {
                self.penalty.coefficient = value.parse().map_err(|_| bad("penalty_coefficient"))?
            }
            "penalty_exponent" => {
                self.penalty.exponent = value.parse().map_err(|_| bad("penalty_exponent"))?
            }
            "rank_method" => self.rank_method = RankMethod::parse(value)?,
            other => {
                return Err(Error::InvalidConfig(format!("unknown config key `{other}`")));
            }
        }
        Ok(())
    }

    /// Loads `key = value` lines from a file; `#` starts a comment.
    pub fn apply_file(&mut self, path: &Path) -> Result<()> {
        let reader = BufReader::new(fs::File::open(path)?);
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| Error::ConfigFile {
                line: idx + 1,
                message: format!("expected key=value, got `{line}`"),
            })?;
            self.apply(key.trim(), value.trim())
                .map_err(|e| Error::ConfigFile {
                    line: idx + 1,
                    message: e.to_string(),
                })?;
        }
        Ok(())
    }
}

/// Significance of one algorithm against another on the same problem.
#[derive(Debug, Clone, Serialize)]
pub struct PairPValue {
    pub versus: String,
    /// `None` mirrors the NaN convention for identical result sets.
    pub p_value: Option<f64>,
}

/// Aggregated results for one (problem, algorithm) pair.
#[derive(Debug, Clone, Serialize)]
pub struct BundleEntry {
    pub problem: String,
    pub algorithm: String,
    pub avg: f64,
    pub std: f64,
    pub best: f64,
    pub worst: f64,
    pub rank: f64,
    pub p_versus: Vec<PairPValue>,
    pub mean_trace: Vec<f64>,
    #[serde(skip)]
    pub min_trace: Vec<f64>,
    #[serde(skip)]
    pub max_trace: Vec<f64>,
    #[serde(skip)]
    pub trace_iterations: Vec<usize>,
}

/// Everything the harness computed, in configuration order.
#[derive(Debug, Clone, Serialize)]
pub struct ResultsBundle {
    pub config: ExperimentConfig,
    pub entries: Vec<BundleEntry>,
}

impl ResultsBundle {
    /// The entry for a given problem and algorithm, if present.
    pub fn entry(&self, problem: &str, algorithm: Algorithm) -> Option<&BundleEntry> {
        self.entries
            .iter()
            .find(|e| e.problem == problem && e.algorithm == algorithm.name())
    }
}

fn run_batch(
    algorithm: Algorithm,
    problem: &dyn Problem,
    config: &ExperimentConfig,
) -> Result<Vec<RunRecord>> {
    let run_one = |k: usize| algorithm.run(problem, &config.run_config(k));
    if config.parallel > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.parallel)
            .build()
            .map_err(|e| Error::InvalidConfig(format!("thread pool: {e}")))?;
        pool.install(|| (0..config.runs).into_par_iter().map(run_one).collect())
    } else {
        (0..config.runs).map(run_one).collect()
    }
}

fn trace_stats(records: &[RunRecord]) -> (Vec<usize>, Vec<f64>, Vec<f64>, Vec<f64>) {
    let len = records.iter().map(|r| r.trace.len()).min().unwrap_or(0);
    let mut iterations = Vec::with_capacity(len);
    let mut mean = Vec::with_capacity(len);
    let mut min = Vec::with_capacity(len);
    let mut max = Vec::with_capacity(len);
    for i in 0..len {
        iterations.push(records[0].trace[i].0);
        let values: Vec<f64> = records.iter().map(|r| r.trace[i].1).collect();
        let s = summarize(&values);
        mean.push(s.mean);
        min.push(s.min);
        max.push(s.max);
    }
    (iterations, mean, min, max)
}

/// Runs the full experiment and writes `summary.csv`, `wilcoxon.csv`,
/// `traces/<algo>_<problem>.csv`, and `bundle.json` under the output directory.
///
/// Problems are resolved lazily; if an id fails to resolve partway through,
/// the results gathered so far are still flushed before the error returns.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ResultsBundle> {
    config.validate()?;
    let mut bundle = ResultsBundle {
        config: config.clone(),
        entries: Vec::new(),
    };

    let outcome = (|| -> Result<()> {
        for problem_id in &config.problems {
            let problem = lookup(problem_id, &config.penalty)?;
            let mut finals: Vec<Vec<f64>> = Vec::new();
            let mut entries: Vec<BundleEntry> = Vec::new();
            for &algorithm in &config.algorithms {
                let records = run_batch(algorithm, problem.as_ref(), config)?;
                let values: Vec<f64> = records.iter().map(|r| r.best_fitness).collect();
                let summary = summarize(&values);
                let (iterations, mean_trace, min_trace, max_trace) = trace_stats(&records);
                entries.push(BundleEntry {
                    problem: problem_id.clone(),
                    algorithm: algorithm.name().to_string(),
                    avg: summary.mean,
                    std: summary.std,
                    best: summary.min,
                    worst: summary.max,
                    rank: 0.0,
                    p_versus: Vec::new(),
                    mean_trace,
                    min_trace,
                    max_trace,
                    trace_iterations: iterations,
                });
                finals.push(values);
            }
            let means: Vec<f64> = entries.iter().map(|e| e.avg).collect();
            let ranks: Vec<f64> = match config.rank_method {
                RankMethod::Competition => competition_rank(&means)
                    .into_iter()
                    .map(|r| r.rank as f64)
                    .collect(),
                RankMethod::Fractional => fractional_rank(&means),
            };
            for (a, entry) in entries.iter_mut().enumerate() {
                entry.rank = ranks[a];
                entry.p_versus = config
                    .algorithms
                    .iter()
                    .enumerate()
                    .filter(|&(b, _)| b != a)
                    .map(|(b, &other)| PairPValue {
                        versus: other.name().to_string(),
                        p_value: wilcoxon_ranksum(&finals[a], &finals[b]).p_value(),
                    })
                    .collect();
            }
            bundle.entries.extend(entries);
        }
        Ok(())
    })();

    let written = write_outputs(&bundle, &config.output_dir);
    outcome?;
    written?;
    Ok(bundle)
}

/// Formats with a fixed number of decimals in scientific notation, always
/// showing the exponent sign and at least two exponent digits, e.g. `1.234E-05`.
pub fn sci(x: f64, decimals: usize) -> String {
    if x.is_nan() {
        return "NaN".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "INF" } else { "-INF" }.to_string();
    }
    let formatted = format!("{:.*e}", decimals, x);
    let (mantissa, exponent) = formatted.split_once('e').expect("e notation");
    let exponent: i32 = exponent.parse().expect("numeric exponent");
    let sign = if exponent < 0 { '-' } else { '+' };
    format!("{mantissa}E{sign}{:02}", exponent.abs())
}

fn format_rank(rank: f64) -> String {
    if rank.fract() == 0.0 {
        format!("{}", rank as i64)
    } else {
        format!("{rank:.1}")
    }
}

/// Writes all output files for a (possibly partial) bundle.
pub fn write_outputs(bundle: &ResultsBundle, dir: &Path) -> Result<()> {
    fs::create_dir_all(dir.join("traces"))?;

    let mut summary = csv::Writer::from_path(dir.join("summary.csv"))?;
    summary.write_record(["problem", "algorithm", "avg", "std", "best", "worst", "rank"])?;
    for entry in &bundle.entries {
        summary.write_record([
            entry.problem.as_str(),
            entry.algorithm.as_str(),
            &sci(entry.avg, 3),
            &sci(entry.std, 3),
            &sci(entry.best, 3),
            &sci(entry.worst, 3),
            &format_rank(entry.rank),
        ])?;
    }
    summary.flush()?;

    let algorithms: Vec<&str> = bundle.config.algorithms.iter().map(|a| a.name()).collect();
    let mut wilcoxon = csv::Writer::from_path(dir.join("wilcoxon.csv"))?;
    let mut header = vec!["problem", "algorithm"];
    header.extend(&algorithms);
    wilcoxon.write_record(&header)?;
    for entry in &bundle.entries {
        let mut row = vec![entry.problem.clone(), entry.algorithm.clone()];
        for &other in &algorithms {
            if other == entry.algorithm {
                // An algorithm against itself is the degenerate identical case.
                row.push("NaN".to_string());
            } else {
                let cell = entry
                    .p_versus
                    .iter()
                    .find(|p| p.versus == other)
                    .and_then(|p| p.p_value);
                row.push(match cell {
                    Some(p) => sci(p, 3),
                    None => "NaN".to_string(),
                });
            }
        }
        wilcoxon.write_record(&row)?;
    }
    wilcoxon.flush()?;

    for entry in &bundle.entries {
        let path = dir
            .join("traces")
            .join(format!("{}_{}.csv", entry.algorithm, entry.problem));
        let mut trace = csv::Writer::from_path(path)?;
        trace.write_record(["iteration", "mean_best", "min_best", "max_best"])?;
        for i in 0..entry.trace_iterations.len() {
            trace.write_record([
                entry.trace_iterations[i].to_string(),
                sci(entry.mean_trace[i], 5),
                sci(entry.min_trace[i], 5),
                sci(entry.max_trace[i], 5),
            ])?;
        }
        trace.flush()?;
    }

    let file = fs::File::create(dir.join("bundle.json"))?;
    serde_json::to_writer_pretty(file, bundle)?;
    Ok(())
}
