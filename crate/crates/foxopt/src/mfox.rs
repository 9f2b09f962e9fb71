//! The mFOX optimizer, a modified FOX with opposition-based initialization, a
//! quadratic step-scale schedule, and a three-way move split per agent:
//! exploit the best position, walk randomly around it, or move relative to a
//! randomly chosen peer.

use crate::core::{
    init_population, select_best, Agent, Bounds, Budget, Population, Problem, Result, RngStream,
    RunConfig, RunRecord,
};
use crate::fox::{fox_exploit_step, FoxParams};

/// Control parameters for the mFOX update rules.
#[derive(Debug, Clone, PartialEq)]
pub struct MfoxParams {
    /// Jump damping factor used when the direction draw exceeds `p_threshold`.
    pub c1: f64,
    /// Jump damping factor used otherwise.
    pub c2: f64,
    /// Split point for the exploitation direction draw `p`.
    pub p_threshold: f64,
    /// Agents draw `r` once per iteration; `r <= r_exploit` exploits.
    pub r_exploit: f64,
    /// `r_exploit < r < r_walk` walks; `r >= r_walk` moves relative to a peer.
    pub r_walk: f64,
    /// Multiset the peer-move divisor is drawn from, so 1 appears twice as often as 2.
    pub rn_pool: [f64; 3],
}

impl Default for MfoxParams {
    fn default() -> Self {
        Self {
            c1: 0.18,
            c2: 0.82,
            p_threshold: 0.18,
            r_exploit: 0.2,
            r_walk: 0.6,
            rn_pool: [1.0, 1.0, 2.0],
        }
    }
}

impl MfoxParams {
    /// The exploitation constants viewed as FOX parameters.
    pub fn fox(&self) -> FoxParams {
        FoxParams {
            c1: self.c1,
            c2: self.c2,
            p_threshold: self.p_threshold,
            r_split: 0.5,
        }
    }
}

/// Reflects a position through the box midpoint, coordinate-wise `lb + ub - x`.
pub fn obl_opposite(position: &[f64], bounds: &Bounds) -> Vec<f64> {
    assert_eq!(position.len(), bounds.dim());
    position
        .iter()
        .zip(bounds.lower().iter().zip(bounds.upper()))
        .map(|(x, (lo, hi))| lo + hi - x)
        .collect()
}

/// Replaces each evaluated agent by its opposite when the opposite is fitter.
///
/// Ties keep the original agent. Consumes one evaluation per agent unless the
/// budget runs out, in which case the remaining agents are left as they are.
pub fn obl_init(
    population: &mut Population,
    problem: &dyn Problem,
    rng: &mut RngStream,
    budget: &mut Budget,
) {
    let bounds = problem.bounds();
    for agent in &mut population.agents {
        let opposite = obl_opposite(&agent.position, &bounds);
        match budget.eval(problem, &opposite, rng) {
            Some(f) if f < agent.fitness => {
                agent.position = opposite;
                agent.fitness = f;
            }
            Some(_) => {}
            None => break,
        }
    }
}

/// Walk and peer-move step scale, decreasing quadratically from 1 to 0.
pub fn a_modified(it: usize, max_it: usize) -> f64 {
    let frac = it as f64 / max_it as f64;
    (1.0 - frac) * (1.0 - frac)
}

/// Random-walk position with the draw supplied by the caller.
pub fn walk_move(best_position: &[f64], draw: &[f64], a_mod: f64) -> Vec<f64> {
    best_position
        .iter()
        .zip(draw)
        .map(|(b, d)| b + d * a_mod)
        .collect()
}

/// Random walk around the best position using a normal draw scaled by `a_mod`.
pub fn mfox_random_walk(best_position: &[f64], a_mod: f64, rng: &mut RngStream) -> Vec<f64> {
    let draw = rng.normal_vec(best_position.len());
    walk_move(best_position, &draw, a_mod)
}

/// Peer-relative move with the divisor and draw supplied by the caller.
///
/// A fitter peer attracts: `x_i + (u / rn) * (x_peer - rn * x_i)`. Otherwise
/// the agent pushes away from the peer with a step damped by `a_mod`.
pub fn peer_move(
    x_i: &[f64],
    x_peer: &[f64],
    peer_is_fitter: bool,
    rn: f64,
    u: &[f64],
    a_mod: f64,
) -> Vec<f64> {
    x_i.iter()
        .zip(x_peer.iter().zip(u))
        .map(|(xi, (xp, ui))| {
            if peer_is_fitter {
                xi + (ui / rn) * (xp - rn * xi)
            } else {
                xi + a_mod * ui * (xi - rn * xp)
            }
        })
        .collect()
}

/// Peer-relative move, drawing the divisor from the pool and a uniform vector.
pub fn mfox_peer_explore(
    agent: &Agent,
    peer: &Agent,
    a_mod: f64,
    rng: &mut RngStream,
    params: &MfoxParams,
) -> Vec<f64> {
    let rn = params.rn_pool[rng.index(params.rn_pool.len())];
    let u = rng.uniform_vec(agent.position.len());
    peer_move(
        &agent.position,
        &peer.position,
        peer.fitness < agent.fitness,
        rn,
        &u,
        a_mod,
    )
}

/// Runs mFOX on `problem` under `config` and returns the best solution found.
pub fn mfox_run(problem: &dyn Problem, config: &RunConfig) -> Result<RunRecord> {
    config.validate()?;
    let params = MfoxParams::default();
    let fox_params = params.fox();
    let bounds = problem.bounds();
    let dim = problem.dim();
    let mut rng = RngStream::new(config.seed);
    let mut budget = Budget::new(config.fe_budget);

    let mut population = init_population(config.pop, &bounds, &mut rng);
    for agent in &mut population.agents {
        match budget.eval(problem, &agent.position, &mut rng) {
            Some(f) => agent.fitness = f,
            None => break,
        }
    }
    obl_init(&mut population, problem, &mut rng, &mut budget);
    let best_idx = select_best(&population);
    let mut best_position = population.agents[best_idx].position.clone();
    let mut best_fitness = population.agents[best_idx].fitness;

    let mut trace = Vec::with_capacity(config.max_iterations);

    'outer: for it in 1..=config.max_iterations {
        if budget.exhausted() {
            break;
        }
        let a_mod = a_modified(it, config.max_iterations);
        // Peer moves compare against the population as it stood when the
        // iteration began, so the outcome does not depend on sweep order.
        let snapshot: Vec<Agent> = population.agents.clone();
        let mut evaluated = false;
        for i in 0..population.agents.len() {
            let r = rng.uniform();
            let mut candidate = if r <= params.r_exploit {
                let time_st = rng.uniform_vec_open_closed(dim);
                let p = rng.uniform();
                fox_exploit_step(&best_position, &time_st, p, &fox_params)
            } else if r < params.r_walk {
                mfox_random_walk(&best_position, a_mod, &mut rng)
            } else {
                let mut j = rng.index(population.agents.len());
                while j == i {
                    j = rng.index(population.agents.len());
                }
                mfox_peer_explore(&snapshot[i], &snapshot[j], a_mod, &mut rng, &params)
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
            population.agents[i].position = candidate;
            population.agents[i].fitness = fitness;
            if fitness < best_fitness {
                best_fitness = fitness;
                best_position = population.agents[i].position.clone();
            }
        }
        let idx = select_best(&population);
        if population.agents[idx].fitness < best_fitness {
            best_fitness = population.agents[idx].fitness;
            best_position = population.agents[idx].position.clone();
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::benchmarks::make_benchmark;

    struct Quadratic {
        center: f64,
        bounds: (f64, f64),
    }

    impl Problem for Quadratic {
        fn name(&self) -> &str {
            "quadratic"
        }
        fn dim(&self) -> usize {
            1
        }
        fn bounds(&self) -> Bounds {
            Bounds::uniform(1, self.bounds.0, self.bounds.1).unwrap()
        }
        fn evaluate(&self, x: &[f64], _rng: &mut RngStream) -> f64 {
            (x[0] - self.center) * (x[0] - self.center)
        }
    }

    #[test]
    fn opposite_reflects_through_midpoint() {
        let symmetric = Bounds::uniform(1, -10.0, 10.0).unwrap();
        assert_eq!(obl_opposite(&[3.0], &symmetric), vec![-3.0]);
        assert_eq!(obl_opposite(&[0.0], &symmetric), vec![0.0]);
        let shifted = Bounds::uniform(1, 0.0, 10.0).unwrap();
        assert_eq!(obl_opposite(&[2.0], &shifted), vec![8.0]);
        assert_eq!(obl_opposite(&[5.0], &shifted), vec![5.0]);
    }

    #[test]
    fn opposite_is_an_involution() {
        let bounds = Bounds::new(vec![-10.0, 0.0, -3.5], vec![10.0, 7.0, 12.5]).unwrap();
        let mut rng = RngStream::new(4);
        for _ in 0..500 {
            let x: Vec<f64> = bounds
                .lower()
                .iter()
                .zip(bounds.upper())
                .map(|(lo, hi)| lo + rng.uniform() * (hi - lo))
                .collect();
            let back = obl_opposite(&obl_opposite(&x, &bounds), &bounds);
            for (a, b) in x.iter().zip(&back) {
                assert!((a - b).abs() <= 1e-12, "{a} vs {b}");
            }
            assert!(bounds.contains(&obl_opposite(&x, &bounds)));
        }
    }

    #[test]
    fn obl_init_keeps_the_fitter_side_and_breaks_ties_toward_original() {
        let tie = Quadratic {
            center: 0.0,
            bounds: (-10.0, 10.0),
        };
        let mut rng = RngStream::new(0);
        let mut budget = Budget::new(None);
        let mut population = Population {
            agents: vec![Agent::new(vec![8.0])],
        };
        population.agents[0].fitness = 64.0;
        obl_init(&mut population, &tie, &mut rng, &mut budget);
        // Opposite -8 scores the same 64, so the original position stays.
        assert_eq!(population.agents[0].position, vec![8.0]);
        assert_eq!(budget.used(), 1);

        let skewed = Quadratic {
            center: 9.0,
            bounds: (0.0, 10.0),
        };
        let mut population = Population {
            agents: vec![Agent::new(vec![2.0])],
        };
        population.agents[0].fitness = 49.0;
        obl_init(&mut population, &skewed, &mut rng, &mut budget);
        assert_eq!(population.agents[0].position, vec![8.0]);
        assert_eq!(population.agents[0].fitness, 1.0);
    }

    #[test]
    fn a_modified_is_the_squared_linear_ramp() {
        assert_eq!(a_modified(0, 1000), 1.0);
        assert_eq!(a_modified(500, 1000), 0.25);
        assert_eq!(a_modified(1000, 1000), 0.0);
        for it in 1..=200 {
            let fox_half = crate::fox::fox_a_schedule(it, 200) / 2.0;
            assert!(a_modified(it, 200) <= fox_half + 1e-15);
        }
    }

    #[test]
    fn walk_move_hand_value() {
        assert_eq!(
            walk_move(&[1.0, 1.0], &[0.5, 0.5], 1.0),
            vec![1.5, 1.5]
        );
        assert_eq!(walk_move(&[2.0, -3.0], &[9.9, -4.4], 0.0), vec![2.0, -3.0]);
    }

    #[test]
    fn peer_move_telescopes_onto_a_fitter_peer() {
        let x_i = [2.0, -5.0, 0.25];
        let x_peer = [4.0, 1.0, -9.0];
        let ones = [1.0, 1.0, 1.0];
        assert_eq!(
            peer_move(&x_i, &x_peer, true, 1.0, &ones, 0.7),
            x_peer.to_vec()
        );
    }

    #[test]
    fn peer_move_hand_values() {
        // Fitter peer, rn = 2: x_peer - rn * x_i vanishes when x_peer = 2 x_i.
        assert_eq!(peer_move(&[2.0], &[4.0], true, 2.0, &[0.5], 0.9), vec![2.0]);
        // Worse peer: x + a * u * (x - rn * x_peer) = 2 - 0.5 * 0.5 * 2 = 1.5.
        assert_eq!(
            peer_move(&[2.0], &[4.0], false, 1.0, &[0.5], 0.5),
            vec![1.5]
        );
        // Worse peer with a_mod = 0 leaves the agent in place.
        assert_eq!(
            peer_move(&[2.0, 3.0], &[4.0, -1.0], false, 2.0, &[0.8, 0.1], 0.0),
            vec![2.0, 3.0]
        );
    }

    #[test]
    fn run_accounts_for_every_evaluation() {
        let problem = make_benchmark("F1").unwrap();
        let config = RunConfig {
            pop: 5,
            max_iterations: 40,
            fe_budget: None,
            seed: 21,
        };
        let record = mfox_run(&problem, &config).unwrap();
        assert_eq!(record.evaluations_used, 2 * 5 + 5 * 40);
        assert_eq!(record.trace.len(), 40);
        let mut prev = f64::INFINITY;
        for &(_, fit) in &record.trace {
            assert!(fit <= prev);
            prev = fit;
        }
        assert_eq!(record.best_fitness, record.trace.last().unwrap().1);
        let bounds = problem.bounds();
        assert!(bounds.contains(&record.best_position));
    }

    #[test]
    fn run_stops_mid_iteration_on_budget() {
        let problem = make_benchmark("F9").unwrap();
        let config = RunConfig {
            pop: 5,
            max_iterations: 100,
            fe_budget: Some(27),
            seed: 2,
        };
        let record = mfox_run(&problem, &config).unwrap();
        // 10 at init, then 3 full iterations and 2 evaluations into the 4th.
        assert_eq!(record.evaluations_used, 27);
        assert_eq!(record.trace.len(), 4);
        assert_eq!(record.trace.last().unwrap().0, 4);
    }

    #[test]
    fn run_is_deterministic_per_seed() {
        let problem = make_benchmark("F10").unwrap();
        let config = RunConfig {
            pop: 8,
            max_iterations: 25,
            fe_budget: None,
            seed: 77,
        };
        let a = mfox_run(&problem, &config).unwrap();
        let b = mfox_run(&problem, &config).unwrap();
        assert_eq!(a.best_position, b.best_position);
        assert_eq!(a.trace, b.trace);
        let other = mfox_run(
            &problem,
            &RunConfig {
                seed: 78,
                ..config
            },
        )
        .unwrap();
        assert_ne!(a.best_position, other.best_position);
    }

    #[test]
    fn run_converges_on_a_smooth_bowl() {
        let problem = make_benchmark("F1").unwrap();
        let config = RunConfig {
            pop: 20,
            max_iterations: 200,
            fe_budget: None,
            seed: 3,
        };
        let record = mfox_run(&problem, &config).unwrap();
        assert!(record.best_fitness < 1e-30, "{}", record.best_fitness);
    }
}
