//! Optimizes the four constrained engineering designs with mFOX under a
//! static penalty and reports the best feasible design over a few seeds.

use foxopt::engineering::{engineering_ids, make_engineering, PenaltyConfig};
use foxopt::mfox::mfox_run;
use foxopt::RunConfig;

fn main() {
    let penalty = PenaltyConfig::default();
    for id in engineering_ids() {
        let constrained = make_engineering(id).expect("registered problem");
        let problem = make_engineering(id).unwrap().penalized(penalty);
        let mut best: Option<foxopt::RunRecord> = None;
        for seed in 0..10 {
            let config = RunConfig {
                pop: 30,
                max_iterations: 1000,
                fe_budget: Some(30_000),
                seed,
            };
            let record = mfox_run(&problem, &config).expect("valid config");
            if best
                .as_ref()
                .map(|b| record.best_fitness < b.best_fitness)
                .unwrap_or(true)
            {
                best = Some(record);
            }
        }
        let best = best.unwrap();
        let design: Vec<String> = best
            .best_position
            .iter()
            .map(|x| format!("{x:.6}"))
            .collect();
        println!("{id}:");
        println!("  objective      {:.6}", constrained.raw_objective(&best.best_position));
        println!("  max violation  {:.3e}", constrained.max_violation(&best.best_position));
        println!("  design         [{}]", design.join(", "));
    }
}
