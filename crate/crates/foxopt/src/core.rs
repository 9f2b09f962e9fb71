//! Shared building blocks: search-space bounds, agents, the problem trait,
//! the seeded RNG stream, and run configuration/record types.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Errors produced by configuration, problem lookup, and experiment plumbing.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid bounds at dimension {dim}: lower {lower} must be strictly below upper {upper}")]
    InvalidBounds { dim: usize, lower: f64, upper: f64 },
    #[error("bounds must have at least one dimension")]
    EmptyBounds,
    #[error("bounds arrays differ in length: {lower} vs {upper}")]
    MismatchedBounds { lower: usize, upper: usize },
    #[error("invalid run config: {0}")]
    InvalidConfig(String),
    #[error("unknown problem id '{0}'")]
    UnknownProblem(String),
    #[error("unknown algorithm '{0}'")]
    UnknownAlgorithm(String),
    #[error("config file line {line}: {message}")]
    ConfigFile { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Axis-aligned box constraints with strictly ordered per-dimension limits.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Bounds {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl Bounds {
    /// Builds bounds from per-dimension limits, rejecting empty or inverted ranges.
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(Error::MismatchedBounds {
                lower: lower.len(),
                upper: upper.len(),
            });
        }
        if lower.is_empty() {
            return Err(Error::EmptyBounds);
        }
        for (i, (&lo, &hi)) in lower.iter().zip(&upper).enumerate() {
            if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
                return Err(Error::InvalidBounds {
                    dim: i,
                    lower: lo,
                    upper: hi,
                });
            }
        }
        Ok(Self { lower, upper })
    }

    /// Same limits replicated across `dim` dimensions.
    pub fn uniform(dim: usize, lower: f64, upper: f64) -> Result<Self> {
        Self::new(vec![lower; dim], vec![upper; dim])
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    /// Projects a point onto the box, coordinate by coordinate.
    pub fn clamp(&self, x: &mut [f64]) {
        for ((xi, &lo), &hi) in x.iter_mut().zip(&self.lower).zip(&self.upper) {
            // NaN coordinates are pulled to the lower limit so a single bad
            // arithmetic step cannot poison the whole run.
            if !(*xi >= lo) {
                *xi = lo;
            } else if *xi > hi {
                *xi = hi;
            }
        }
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x.iter()
                .zip(&self.lower)
                .zip(&self.upper)
                .all(|((&xi, &lo), &hi)| xi >= lo && xi <= hi)
    }
}

/// One candidate solution plus its cached objective value.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Agent {
    pub position: Vec<f64>,
    /// `f64::INFINITY` until the position has been evaluated.
    pub fitness: f64,
}

impl Agent {
    pub fn new(position: Vec<f64>) -> Self {
        Self {
            position,
            fitness: f64::INFINITY,
        }
    }
}

/// The swarm: a non-empty set of agents.
#[derive(Debug, Clone)]
pub struct Population {
    pub agents: Vec<Agent>,
}

impl Population {
    pub fn len(&self) -> usize {
        self.agents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.agents.is_empty()
    }
}

/// A minimization target over a box-bounded continuous domain.
///
/// `evaluate` takes the run's RNG stream so stochastic objectives draw from
/// the same seeded sequence as the optimizer, keeping runs reproducible.
pub trait Problem: Send + Sync {
    fn name(&self) -> &str;
    fn dim(&self) -> usize;
    fn bounds(&self) -> Bounds;
    fn evaluate(&self, x: &[f64], rng: &mut RngStream) -> f64;
}

/// Deterministic random stream; the same seed always yields the same draws.
#[derive(Debug, Clone)]
pub struct RngStream {
    rng: ChaCha8Rng,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Uniform draw in `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        self.rng.gen::<f64>()
    }

    /// Uniform draw in `(0, 1]`, safe to divide by.
    pub fn uniform_open_closed(&mut self) -> f64 {
        1.0 - self.rng.gen::<f64>()
    }

    pub fn uniform_vec(&mut self, n: usize) -> Vec<f64> {
        (0..n).map(|_| self.uniform()).collect()
    }

    pub fn uniform_vec_open_closed(&mut self, n: usize) -> Vec<f64> {
        (0..n).map(|_| self.uniform_open_closed()).collect()
    }

    /// Standard normal draw via Box-Muller, consuming exactly two uniforms.
    pub fn normal(&mut self) -> f64 {
        let u1 = self.uniform_open_closed();
        let u2 = self.uniform();
        (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
    }

    pub fn normal_vec(&mut self, n: usize) -> Vec<f64> {
        (0..n).map(|_| self.normal()).collect()
    }

    /// Uniform index in `0..n`.
    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }
}

/// Per-run settings shared by both optimizers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub pop: usize,
    pub max_iterations: usize,
    /// Optional cap on objective evaluations; `None` means iteration-limited only.
    pub fe_budget: Option<usize>,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            pop: 30,
            max_iterations: 1000,
            fe_budget: Some(30_000),
            seed: 0,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.pop < 2 {
            return Err(Error::InvalidConfig(format!(
                "population size must be at least 2, got {}",
                self.pop
            )));
        }
        if self.max_iterations < 1 {
            return Err(Error::InvalidConfig(
                "max_iterations must be at least 1".into(),
            ));
        }
        if let Some(budget) = self.fe_budget {
            if budget < self.pop {
                return Err(Error::InvalidConfig(format!(
                    "fe_budget {} cannot be below the population size {}",
                    budget, self.pop
                )));
            }
        }
        Ok(())
    }
}

/// Outcome of a single optimization run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunRecord {
    pub best_position: Vec<f64>,
    pub best_fitness: f64,
    /// `(iteration, best_fitness_so_far)` per completed (or budget-cut) iteration.
    pub trace: Vec<(usize, f64)>,
    pub evaluations_used: usize,
}

/// Samples agent coordinates uniformly in `[lower, upper)`; fitness stays unevaluated.
pub fn init_population(pop: usize, bounds: &Bounds, rng: &mut RngStream) -> Population {
    let agents = (0..pop)
        .map(|_| {
            let position = bounds
                .lower()
                .iter()
                .zip(bounds.upper())
                .map(|(&lo, &hi)| lo + rng.uniform() * (hi - lo))
                .collect();
            Agent::new(position)
        })
        .collect();
    Population { agents }
}

/// Index of the agent with the lowest fitness; ties keep the earliest index.
pub fn select_best(population: &Population) -> usize {
    let mut best = 0;
    for (i, agent) in population.agents.iter().enumerate().skip(1) {
        if agent.fitness < population.agents[best].fitness {
            best = i;
        }
    }
    best
}

/// Evaluation counter that enforces an optional budget before each call.
#[derive(Debug)]
pub struct Budget {
    used: usize,
    cap: Option<usize>,
}

impl Budget {
    pub fn new(cap: Option<usize>) -> Self {
        Self { used: 0, cap }
    }

    /// Number of evaluations consumed so far.
    pub fn used(&self) -> usize {
        self.used
    }

    pub fn exhausted(&self) -> bool {
        matches!(self.cap, Some(cap) if self.used >= cap)
    }

    /// Evaluates unless the budget is spent; `None` signals the run must stop.
    pub fn eval(&mut self, problem: &dyn Problem, x: &[f64], rng: &mut RngStream) -> Option<f64> {
        if self.exhausted() {
            return None;
        }
        self.used += 1;
        Some(problem.evaluate(x, rng))
    }
}
