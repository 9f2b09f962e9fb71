//! Runs mFOX once on Ackley under the standard 30,000-evaluation budget and
//! shows how the opposition-based start and the three-way move split converge.

use foxopt::benchmarks::make_benchmark;
use foxopt::mfox::mfox_run;
use foxopt::{Problem, RunConfig};

fn main() {
    let problem = make_benchmark("F10").expect("registered benchmark");
    let config = RunConfig {
        pop: 30,
        max_iterations: 1000,
        fe_budget: Some(30_000),
        seed: 1,
    };
    let record = mfox_run(&problem, &config).expect("valid config");

    println!("mFOX on {} (dim {})", problem.name(), problem.dim());
    for &(it, best) in &record.trace {
        if it % 200 == 0 || it == 1 {
            println!("  iteration {it:>4}: best {best:.6e}");
        }
    }
    println!("final best fitness: {:.6e}", record.best_fitness);
    println!("evaluations used:   {}", record.evaluations_used);
    let head: Vec<String> = record.best_position[..4]
        .iter()
        .map(|x| format!("{x:.3e}"))
        .collect();
    println!("best position starts with [{}]", head.join(", "));
}
