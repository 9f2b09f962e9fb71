//! Runs FOX once on the 30-dimensional sphere and prints the convergence tail.

use foxopt::benchmarks::make_benchmark;
use foxopt::fox::fox_run;
use foxopt::{Problem, RunConfig};

fn main() {
    let problem = make_benchmark("F1").expect("registered benchmark");
    let config = RunConfig {
        pop: 30,
        max_iterations: 500,
        fe_budget: None,
        seed: 7,
    };
    let record = fox_run(&problem, &config).expect("valid config");

    println!("FOX on {} (dim {})", problem.name(), problem.dim());
    for &(it, best) in record.trace.iter().filter(|(it, _)| it % 100 == 0) {
        println!("  iteration {it:>4}: best {best:.6e}");
    }
    println!("final best fitness: {:.6e}", record.best_fitness);
    println!("evaluations used:   {}", record.evaluations_used);
}
