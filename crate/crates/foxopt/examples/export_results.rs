//! Runs a small batch experiment through the harness and shows the files it
//! writes: summary table, significance matrix, traces, and the JSON bundle.

use foxopt::harness::{run_experiment, Algorithm, ExperimentConfig};

fn main() {
    let config = ExperimentConfig {
        algorithms: vec![Algorithm::Mfox, Algorithm::Fox],
        problems: vec!["F1".into(), "F16".into(), "spring".into()],
        runs: 5,
        pop: 20,
        max_iterations: 200,
        fe_budget: Some(4_000),
        base_seed: 0,
        output_dir: std::env::temp_dir().join("foxopt_demo"),
        ..ExperimentConfig::default()
    };

    let bundle = run_experiment(&config).expect("experiment runs");
    println!("wrote outputs under {}", config.output_dir.display());
    for name in ["summary.csv", "wilcoxon.csv", "bundle.json"] {
        println!("  {name}");
    }
    for entry in &bundle.entries {
        println!("  traces/{}_{}.csv", entry.algorithm, entry.problem);
    }

    println!();
    let summary = std::fs::read_to_string(config.output_dir.join("summary.csv")).unwrap();
    print!("{summary}");
}
