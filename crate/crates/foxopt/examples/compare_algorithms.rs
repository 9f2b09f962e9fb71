//! Compares FOX and mFOX over seeded run batches on a few benchmarks and
//! reports means, bests, and the rank-sum significance of the difference.

use foxopt::benchmarks::make_benchmark;
use foxopt::fox::fox_run;
use foxopt::mfox::mfox_run;
use foxopt::stats::{summarize, wilcoxon_ranksum, ComparisonCell};
use foxopt::RunConfig;

fn main() {
    let runs = 10;
    println!(
        "{:<5} {:>13} {:>13} {:>13} {:>13} {:>11}",
        "id", "mfox avg", "mfox best", "fox avg", "fox best", "p-value"
    );
    for id in ["F1", "F6", "F10", "F12", "F16", "F18"] {
        let problem = make_benchmark(id).expect("registered benchmark");
        let mut mfox_finals = Vec::with_capacity(runs);
        let mut fox_finals = Vec::with_capacity(runs);
        for seed in 0..runs as u64 {
            let config = RunConfig {
                pop: 30,
                max_iterations: 500,
                fe_budget: Some(15_000),
                seed,
            };
            mfox_finals.push(mfox_run(&problem, &config).unwrap().best_fitness);
            fox_finals.push(fox_run(&problem, &config).unwrap().best_fitness);
        }
        let mfox = summarize(&mfox_finals);
        let fox = summarize(&fox_finals);
        let p = match wilcoxon_ranksum(&mfox_finals, &fox_finals) {
            ComparisonCell::PValue(p) => format!("{p:.4e}"),
            ComparisonCell::Identical => "identical".to_string(),
        };
        println!(
            "{:<5} {:>13.4e} {:>13.4e} {:>13.4e} {:>13.4e} {:>11}",
            id, mfox.mean, mfox.min, fox.mean, fox.min, p
        );
    }
}
