//! Name-based lookup that unifies the classical benchmarks and the penalized
//! engineering problems behind one `Problem` interface.

use crate::benchmarks::{benchmark_ids, make_benchmark};
use crate::core::{Error, Problem, Result};
use crate::engineering::{engineering_ids, make_engineering, PenaltyConfig};

/// Resolves a problem id to a boxed objective ready for an optimizer.
///
/// Benchmark ids are `F1` through `F23`; engineering ids get wrapped with the
/// given static penalty. Ids are case-insensitive.
pub fn lookup(id: &str, penalty: &PenaltyConfig) -> Result<Box<dyn Problem>> {
    let lowered = id.to_ascii_lowercase();
    if engineering_ids().iter().any(|e| *e == lowered) {
        return Ok(Box::new(make_engineering(&lowered)?.penalized(*penalty)));
    }
    match make_benchmark(id) {
        Ok(benchmark) => Ok(Box::new(benchmark)),
        Err(_) => Err(Error::UnknownProblem(id.to_string())),
    }
}

/// All registered ids, benchmarks first.
pub fn all_ids() -> Vec<String> {
    benchmark_ids()
        .iter()
        .chain(engineering_ids().iter())
        .map(|s| s.to_string())
        .collect()
}

/// Expands a suite name into problem ids.
///
/// Accepts `classical`, `engineering`, `all`, or a comma-separated id list.
pub fn suite(name: &str) -> Result<Vec<String>> {
    match name.to_ascii_lowercase().as_str() {
        "classical" => Ok(benchmark_ids().iter().map(|s| s.to_string()).collect()),
        "engineering" => Ok(engineering_ids().iter().map(|s| s.to_string()).collect()),
        "all" => Ok(all_ids()),
        _ => {
            let ids: Vec<String> = name
                .split(',')
                .map(|s| s.trim())
                .filter(|s| !s.is_empty())
                .map(|s| s.to_string())
                .collect();
            if ids.is_empty() {
                return Err(Error::UnknownProblem(name.to_string()));
            }
            Ok(ids)
        }
    }
}
