use std::path::PathBuf;

use anyhow::Result;
use clap::Parser;

use foxopt::harness::{parse_algorithms, run_experiment, ExperimentConfig, RankMethod};
use foxopt::registry::suite;

/// Batch experiment harness for the FOX and mFOX optimizers.
#[derive(Parser)]
#[command(name = "foxopt", version, about)]
struct Cli {
    /// Config file with key=value lines; flags below override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Comma-separated algorithms: mfox, fox.
    #[arg(long)]
    algo: Option<String>,
    /// Suite name (classical, engineering, all) or comma-separated problem ids.
    #[arg(long)]
    suite: Option<String>,
    /// Independent seeded runs per (algorithm, problem).
    #[arg(long)]
    runs: Option<usize>,
    /// Population size.
    #[arg(long)]
    pop: Option<usize>,
    /// Iterations per run.
    #[arg(long)]
    iters: Option<usize>,
    /// Evaluation budget per run; 0 removes the cap.
    #[arg(long)]
    fes: Option<usize>,
    /// Base seed; run k uses seed base + k.
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory for summary.csv, wilcoxon.csv, traces/, bundle.json.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads for run-level parallelism.
    #[arg(long)]
    parallel: Option<usize>,
    /// Static penalty coefficient for the engineering problems.
    #[arg(long)]
    penalty_coefficient: Option<f64>,
    /// Static penalty exponent for the engineering problems.
    #[arg(long)]
    penalty_exponent: Option<f64>,
    /// Summary ranking scheme: competition or fractional.
    #[arg(long)]
    rank_method: Option<String>,
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    let mut config = ExperimentConfig::default();
    if let Some(path) = &cli.config {
        config.apply_file(path)?;
    }
    if let Some(algo) = &cli.algo {
        config.algorithms = parse_algorithms(algo)?;
    }
    if let Some(name) = &cli.suite {
        config.problems = suite(name)?;
    }
    if let Some(runs) = cli.runs {
        config.runs = runs;
    }
    if let Some(pop) = cli.pop {
        config.pop = pop;
    }
    if let Some(iters) = cli.iters {
        config.max_iterations = iters;
    }
    if let Some(fes) = cli.fes {
        config.fe_budget = if fes == 0 { None } else { Some(fes) };
    }
    if let Some(seed) = cli.seed {
        config.base_seed = seed;
    }
    if let Some(out) = cli.out {
        config.output_dir = out;
    }
    if let Some(parallel) = cli.parallel {
        config.parallel = parallel;
    }
    if let Some(coefficient) = cli.penalty_coefficient {
        config.penalty.coefficient = coefficient;
    }
    if let Some(exponent) = cli.penalty_exponent {
        config.penalty.exponent = exponent;
    }
    if let Some(method) = &cli.rank_method {
        config.rank_method = RankMethod::parse(method)?;
    }

    let bundle = run_experiment(&config)?;
    println!(
        "completed {} algorithms x {} problems x {} runs; outputs in {}",
        config.algorithms.len(),
        config.problems.len(),
        config.runs,
        config.output_dir.display()
    );
    for entry in &bundle.entries {
        println!(
            "  {:<12} {:<5} avg {} best {} rank {}",
            entry.problem,
            entry.algorithm,
            foxopt::harness::sci(entry.avg, 3),
            foxopt::harness::sci(entry.best, 3),
            entry.rank
        );
    }
    Ok(())
}
