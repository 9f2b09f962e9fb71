//! Runs mFOX once over every classical benchmark and compares the result with
//! the documented optimum of each function.

use foxopt::benchmarks::{benchmark_ids, benchmark_optimum, make_benchmark};
use foxopt::mfox::mfox_run;
use foxopt::{Problem, RunConfig};

fn main() {
    println!("{:<5} {:<22} {:>4} {:>13} {:>13}", "id", "name", "dim", "found", "optimum");
    for id in benchmark_ids() {
        let problem = make_benchmark(id).expect("registered benchmark");
        let config = RunConfig {
            pop: 30,
            max_iterations: 300,
            fe_budget: Some(9_000),
            seed: 12,
        };
        let record = mfox_run(&problem, &config).expect("valid config");
        let (_, f_min) = benchmark_optimum(id).expect("documented optimum");
        println!(
            "{:<5} {:<22} {:>4} {:>13.4e} {:>13.4e}",
            id,
            problem.name(),
            problem.dim(),
            record.best_fitness,
            f_min
        );
    }
}
