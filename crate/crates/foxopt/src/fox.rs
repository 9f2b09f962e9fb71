//! The FOX optimizer: a swarm method that alternates between jumping on the
//! best-known position (exploitation) and sampling around it with a shrinking
//! step scale (exploration).

use crate::core::{
    init_population, select_best, Budget, Problem, Result, RngStream, RunConfig, RunRecord,
};

/// Control parameters for the FOX update rules.
#[derive(Debug, Clone, PartialEq)]
pub struct FoxParams {
    /// Jump damping factor used when the direction draw exceeds `p_threshold`.
    pub c1: f64,
    /// Jump damping factor used otherwise.
    pub c2: f64,
    /// Split point for the exploitation direction draw `p`.
    pub p_threshold: f64,
    /// Split point for the per-agent exploit/explore draw `r`.
    pub r_split: f64,
}

impl Default for FoxParams {
    fn default() -> Self {
        Self {
            c1: 0.18,
            c2: 0.82,
            p_threshold: 0.18,
            r_split: 0.5,
        }
    }
}

/// Element-wise quotient of the best position by the sound travel times.
pub fn speed_of_sound(best_position: &[f64], time_st: &[f64]) -> Vec<f64> {
    assert_eq!(best_position.len(), time_st.len());
    best_position
        .iter()
        .zip(time_st)
        .map(|(b, t)| b / t)
        .collect()
}

/// Jump height after falling for time `t` under gravity, `0.5 * 9.81 * t^2`.
pub fn fox_jump(t: f64) -> f64 {
    0.5 * 9.81 * t * t
}

/// Exploitation step with the travel times and direction draw supplied by the caller.
///
/// Computes speed of sound, travel distance, and half distance to the prey,
/// then scales by the jump height and `c1` or `c2` depending on `p`. The chain
/// reduces algebraically to `0.5 * jump * c * best_position`.
pub fn fox_exploit_step(
    best_position: &[f64],
    time_st: &[f64],
    p: f64,
    params: &FoxParams,
) -> Vec<f64> {
    let sp_s = speed_of_sound(best_position, time_st);
    let dist_st: Vec<f64> = sp_s.iter().zip(time_st).map(|(s, t)| s * t).collect();
    let dist_fox_prey: Vec<f64> = dist_st.iter().map(|d| 0.5 * d).collect();
    let tt = time_st.iter().sum::<f64>() / time_st.len() as f64;
    let t = tt / 2.0;
    let jump = fox_jump(t);
    let c = if p > params.p_threshold {
        params.c1
    } else {
        params.c2
    };
    dist_fox_prey.iter().map(|d| d * jump * c).collect()
}

/// Exploitation step that samples travel times in (0, 1] and the direction draw.
///
/// Returns the candidate position and the mean travel time `tt`, which the
/// caller folds into the running minimum used by exploration.
pub fn fox_exploit_with_time(
    best_position: &[f64],
    rng: &mut RngStream,
    params: &FoxParams,
) -> (Vec<f64>, f64) {
    let time_st = rng.uniform_vec_open_closed(best_position.len());
    let p = rng.uniform();
    let tt = time_st.iter().sum::<f64>() / time_st.len() as f64;
    (fox_exploit_step(best_position, &time_st, p, params), tt)
}

/// Exploitation step keeping only the candidate position.
pub fn fox_exploit(best_position: &[f64], rng: &mut RngStream, params: &FoxParams) -> Vec<f64> {
    fox_exploit_with_time(best_position, rng, params).0
}

/// Exploration step scale, decreasing linearly from 2 to 0 over the run.
pub fn fox_a_schedule(it: usize, max_it: usize) -> f64 {
    2.0 * (1.0 - it as f64 / max_it as f64)
}

/// Exploration step: a normal draw around the best position scaled by `min_t * a`.
pub fn fox_explore(best_position: &[f64], min_t: f64, a: f64, rng: &mut RngStream) -> Vec<f64> {
    let draw = rng.normal_vec(best_position.len());
    best_position
        .iter()
        .zip(&draw)
        .map(|(b, d)| b + d * min_t * a)
        .collect()
}

/// Runs FOX on `problem` under `config` and returns the best solution found.
pub fn fox_run(problem: &dyn Problem, config: &RunConfig) -> Result<RunRecord> {
    config.validate()?;
    let params = FoxParams::default();
    let bounds = problem.bounds();
    let mut rng = RngStream::new(config.seed);
    let mut budget = Budget::new(config.fe_budget);

    let mut population = init_population(config.pop, &bounds, &mut rng);
    for agent in &mut population.agents {
        match budget.eval(problem, &agent.position, &mut rng) {
            Some(f) => agent.fitness = f,
            None => break,
        }
    }
    let best_idx = select_best(&population);
    let mut best_position = population.agents[best_idx].position.clone();
    let mut best_fitness = population.agents[best_idx].fitness;

    // tt is a mean of draws from (0, 1], so 1.0 is an upper bound for the
    // running minimum before the first exploitation draw lands.
    let mut min_t = 1.0_f64;
    let mut trace = Vec::with_capacity(config.max_iterations);

    'outer: for it in 1..=config.max_iterations {
        if budget.exhausted() {
            break;
        }
        let a = fox_a_schedule(it, config.max_iterations);
        let mut evaluated = false;
        for agent in &mut population.agents {
            let r = rng.uniform();
            let mut candidate = if r >= params.r_split {
                let (candidate, tt) = fox_exploit_with_time(&best_position, &mut rng, &params);
                min_t = min_t.min(tt);
                candidate
            } else {
                fox_explore(&best_position, min_t, a, &mut rng)
            };
            bounds.clamp(&mut candidate);
            let fitness = match budget.eval(problem, &candidate, &mut rng) {
                Some(f) => f,
                None => {
                    if evaluated {
                        trace.push((it, best_fitness));
                    }
                    break 'outer;
                }
            };
            evaluated = true;
            agent.position = candidate;
            agent.fitness = fitness;
            if fitness < best_fitness {
                best_fitness = fitness;
                best_position = agent.position.clone();
            }
        }
        trace.push((it, best_fitness));
    }

    Ok(RunRecord {
        best_position,
        best_fitness,
        trace,
        evaluations_used: budget.used(),
    })
}
