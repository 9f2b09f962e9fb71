//! FOX and mFOX swarm optimizers with the classical benchmark suite,
//! penalty-based constrained engineering problems, nonparametric comparison
//! statistics, and a batch experiment harness.
//!
//! The optimizers minimize any [`Problem`] under a seeded, reproducible
//! [`RngStream`]; every run with the same seed yields the same trajectory.
//!
//! ```
//! use foxopt::benchmarks::make_benchmark;
//! use foxopt::mfox::mfox_run;
//! use foxopt::RunConfig;
//!
//! let sphere = make_benchmark("F1").unwrap();
//! let config = RunConfig { pop: 10, max_iterations: 100, fe_budget: None, seed: 1 };
//! let record = mfox_run(&sphere, &config).unwrap();
//! assert!(record.best_fitness < 1e-6);
//! ```

pub mod benchmarks;
pub mod core;
pub mod engineering;
pub mod fox;
pub mod harness;
pub mod mfox;
pub mod registry;
pub mod stats;

pub use core::{
    init_population, select_best, Agent, Bounds, Budget, Error, Population, Problem, Result,
    RngStream, RunConfig, RunRecord,
};
