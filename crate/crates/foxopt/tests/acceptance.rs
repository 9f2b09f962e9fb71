//! Acceptance suite: checks both optimizers end to end against published
//! reference results at the full comparison protocol (population 30, 1000
//! iterations, 30000-evaluation budget, 30 seeded repeats per problem).
//!
//! Every clause prints its own verdict and each criterion prints one summary
//! line, so a failure names exactly what regressed. Clauses this
//! implementation is known not to reach (see the README's "known gaps"
//! section) still run and still fail; nothing is skipped or weakened.

use std::collections::HashMap;

use foxopt::benchmarks::make_benchmark;
use foxopt::engineering::{make_engineering, PenaltyConfig};
use foxopt::fox::{fox_a_schedule, fox_jump};
use foxopt::harness::Algorithm;
use foxopt::mfox::{a_modified, obl_init, obl_opposite, MfoxParams};
use foxopt::registry::lookup;
use foxopt::stats::{competition_rank, summarize, wilcoxon_ranksum, ComparisonCell};
use foxopt::{init_population, Bounds, Budget, Problem, RngStream, RunConfig};

const RUNS: usize = 30;
/// Chosen once; every seeded clause below derives its streams from this.
const BASE_SEED: u64 = 7777;

fn protocol(seed: u64) -> RunConfig {
    RunConfig {
        pop: 30,
        max_iterations: 1000,
        fe_budget: Some(30_000),
        seed,
    }
}

/// Clause bookkeeping: streams clause verdicts, then one line per criterion.
struct Gate {
    failures: Vec<String>,
    current: Vec<String>,
}

impl Gate {
    fn new() -> Self {
        Self {
            failures: Vec::new(),
            current: Vec::new(),
        }
    }

    fn clause(&mut self, label: &str, ok: bool, detail: String) {
        println!("    [{}] {label}: {detail}", if ok { "ok" } else { "FAIL" });
        if !ok {
            self.current.push(label.to_string());
        }
    }

    fn finish(&mut self, number: usize, title: &str) {
        if self.current.is_empty() {
            println!("criterion {number} ({title}): PASS");
        } else {
            println!(
                "criterion {number} ({title}): FAIL [{}]",
                self.current.join("; ")
            );
            let failed = std::mem::take(&mut self.current);
            self.failures
                .extend(failed.into_iter().map(|c| format!("criterion {number}: {c}")));
        }
        println!();
    }
}

/// Runs and caches the 30-seed batches so criteria can share them.
struct Lab {
    cache: HashMap<(&'static str, String), Vec<f64>>,
}

impl Lab {
    fn new() -> Self {
        Self {
            cache: HashMap::new(),
        }
    }

    fn batch(&mut self, algo: Algorithm, id: &str) -> Vec<f64> {
        let key = (algo.name(), id.to_string());
        if let Some(v) = self.cache.get(&key) {
            return v.clone();
        }
        let problem = lookup(id, &PenaltyConfig::default()).unwrap();
        let finals: Vec<f64> = (0..RUNS)
            .map(|k| {
                let config = protocol(BASE_SEED + k as u64);
                algo.run(problem.as_ref(), &config).unwrap().best_fitness
            })
            .collect();
        self.cache.insert(key, finals.clone());
        finals
    }
}

fn random_point(bounds: &Bounds, rng: &mut RngStream) -> Vec<f64> {
    (0..bounds.dim())
        .map(|d| {
            let lo = bounds.lower()[d];
            let hi = bounds.upper()[d];
            lo + rng.uniform() * (hi - lo)
        })
        .collect()
}

#[test]
fn acceptance() {
    let mut gate = Gate::new();
    let mut lab = Lab::new();

    criterion_1_unit_oracles(&mut gate);
    criterion_2_benchmark_values(&mut gate);
    criterion_3_near_zero_convergence(&mut gate, &mut lab);
    criterion_4_dominance_and_significance(&mut gate, &mut lab);
    criterion_5_fixed_dimension_accuracy(&mut gate, &mut lab);
    criterion_6_design_point_regression(&mut gate);
    criterion_7_constrained_optimization(&mut gate, &mut lab);
    criterion_8_statistics_oracles(&mut gate);
    criterion_9_behavioral_invariants(&mut gate);

    assert!(
        gate.failures.is_empty(),
        "{} acceptance clause(s) failed:\n  {}",
        gate.failures.len(),
        gate.failures.join("\n  ")
    );
}

fn criterion_1_unit_oracles(gate: &mut Gate) {
    let am = a_modified(500, 1000);
    gate.clause("walk scale at midpoint", am == 0.25, format!("a_modified(500, 1000) = {am}"));

    let a = fox_a_schedule(500, 1000);
    gate.clause("distance scale at midpoint", a == 1.0, format!("fox_a_schedule(500, 1000) = {a}"));

    let jump = fox_jump(0.5);
    gate.clause("jump height at t = 0.5", jump == 1.22625, format!("fox_jump(0.5) = {jump}"));

    // reflecting twice must return the original point to within 1e-15 on
    // every problem's box, including the asymmetric engineering ones
    let mut rng = RngStream::new(9001);
    let mut worst: f64 = 0.0;
    let mut boxes: Vec<Bounds> = ["F1", "F8", "F14", "F19"]
        .iter()
        .map(|id| make_benchmark(id).unwrap().bounds())
        .collect();
    boxes.push(make_engineering("spring").unwrap().bounds());
    boxes.push(make_engineering("bearing").unwrap().bounds());
    for bounds in &boxes {
        for _ in 0..200 {
            let x = random_point(bounds, &mut rng);
            let back = obl_opposite(&obl_opposite(&x, bounds), bounds);
            for (orig, round_trip) in x.iter().zip(&back) {
                worst = worst.max((orig - round_trip).abs());
            }
        }
    }
    gate.clause(
        "opposition involution",
        worst <= 1e-15,
        format!("max round-trip drift {worst:.2e} over {} boxes x 200 points", boxes.len()),
    );

    gate.finish(1, "deterministic unit oracles");
}

fn criterion_2_benchmark_values(gate: &mut Gate) {
    let mut rng = RngStream::new(0);

    let f1 = make_benchmark("F1").unwrap();
    let at_origin = f1.evaluate(&vec![0.0; f1.dim()], &mut rng);
    gate.clause("sphere at origin", at_origin == 0.0, format!("F1(0) = {at_origin}"));

    let f8 = make_benchmark("F8").unwrap();
    let v8 = f8.evaluate(&vec![420.9687; f8.dim()], &mut rng);
    gate.clause(
        "schwefel at known minimizer",
        (v8 + 12_569.487).abs() <= 0.05,
        format!("F8(420.9687...) = {v8:.4}, reference -12569.487"),
    );

    let f16 = make_benchmark("F16").unwrap();
    let v16 = f16.evaluate(&[0.08984201, -0.7126564], &mut rng);
    gate.clause(
        "six-hump camel at known minimizer",
        (v16 + 1.0316).abs() <= 1e-4,
        format!("F16 value {v16:.7}, reference -1.0316"),
    );

    let f14 = make_benchmark("F14").unwrap();
    let v14 = f14.evaluate(&[-32.0, -32.0], &mut rng);
    gate.clause(
        "foxholes at known minimizer",
        (v14 - 0.998).abs() <= 1e-3,
        format!("F14 value {v14:.7}, reference 0.998"),
    );

    gate.finish(2, "benchmark reference values");
}

fn criterion_3_near_zero_convergence(gate: &mut Gate, lab: &mut Lab) {
    for id in ["F1", "F2", "F3", "F4", "F9", "F11"] {
        let mean = summarize(&lab.batch(Algorithm::Mfox, id)).mean;
        gate.clause(
            &format!("{id} mean final best"),
            mean <= 1e-250,
            format!("mfox mean {mean:.3e}, required <= 1e-250"),
        );
    }
    let mean = summarize(&lab.batch(Algorithm::Mfox, "F10")).mean;
    gate.clause(
        "F10 mean final best",
        mean <= 1e-15,
        format!("mfox mean {mean:.3e}, required <= 1e-15"),
    );

    gate.finish(3, "near-zero convergence");
}

fn criterion_4_dominance_and_significance(gate: &mut Gate, lab: &mut Lab) {
    let ids = [
        "F5", "F6", "F12", "F13", "F16", "F17", "F18", "F19", "F20", "F21", "F22", "F23",
    ];
    let significant = ["F6", "F12", "F16", "F18", "F21", "F22", "F23"];

    for id in ids {
        let mf = lab.batch(Algorithm::Mfox, id);
        let fx = lab.batch(Algorithm::Fox, id);
        let (m, f) = (summarize(&mf).mean, summarize(&fx).mean);
        gate.clause(
            &format!("{id} mean dominance"),
            m <= f,
            format!("mfox {m:.4e} vs fox {f:.4e}"),
        );
        if significant.contains(&id) {
            let p = wilcoxon_ranksum(&mf, &fx).p_value();
            let ok = p.map(|v| v < 0.05).unwrap_or(false);
            let shown = p.map_or("undefined (identical)".into(), |v| format!("{v:.3e}"));
            gate.clause(&format!("{id} significance"), ok, format!("p = {shown}, required < 0.05"));
        }
    }

    gate.finish(4, "dominance and significance");
}

fn criterion_5_fixed_dimension_accuracy(gate: &mut Gate, lab: &mut Lab) {
    let f16 = summarize(&lab.batch(Algorithm::Mfox, "F16")).mean;
    gate.clause(
        "F16 mean accuracy",
        (f16 + 1.0316).abs() <= 1e-3,
        format!("mfox mean {f16:.6}, reference -1.0316"),
    );

    let f18 = summarize(&lab.batch(Algorithm::Mfox, "F18")).mean;
    gate.clause(
        "F18 mean accuracy",
        (f18 - 3.0).abs() <= 1e-2,
        format!("mfox mean {f18:.6}, reference 3.0"),
    );

    for id in ["F21", "F22", "F23"] {
        let mean = summarize(&lab.batch(Algorithm::Mfox, id)).mean;
        gate.clause(
            &format!("{id} mean depth"),
            mean <= -10.0,
            format!("mfox mean {mean:.4}, required <= -10.0"),
        );
    }

    gate.finish(5, "fixed-dimension accuracy");
}

fn criterion_6_design_point_regression(gate: &mut Gate) {
    let points: [(&str, &[f64], f64); 4] = [
        ("spring", &[0.051686, 0.356639, 11.29403], 0.012666),
        ("vessel", &[0.778175, 0.384652, 40.31996, 199.9994], 5_885.432),
        ("compressor", &[50.0, 1.178568, 24.51979, 0.389022], 2_964_901.409),
        ("bearing", &[6.009451, 5.446845, 5.37e-6, 2.298136], 1_637.581),
    ];
    for (id, x, reference) in points {
        let problem = make_engineering(id).unwrap();
        let objective = problem.raw_objective(x);
        let rel = (objective - reference).abs() / reference.abs();
        gate.clause(
            &format!("{id} objective reproduction"),
            rel <= 1e-3,
            format!("f = {objective:.6}, reference {reference}, rel err {rel:.2e}"),
        );
        let violation = problem.max_violation(x);
        gate.clause(
            &format!("{id} reference-point feasibility"),
            violation <= 1e-4,
            format!("max constraint violation {violation:.4e}"),
        );
    }

    gate.finish(6, "design-point regression");
}

fn criterion_7_constrained_optimization(gate: &mut Gate, lab: &mut Lab) {
    let thresholds = [
        ("spring", 0.0127),
        ("vessel", 5_900.0),
        ("compressor", 2.966e6),
        ("bearing", 1_700.0),
    ];
    for (id, limit) in thresholds {
        let best = summarize(&lab.batch(Algorithm::Mfox, id)).min;
        gate.clause(
            &format!("{id} best of {RUNS} runs"),
            best <= limit,
            format!("best {best:.6e}, required <= {limit:e}"),
        );
    }

    gate.finish(7, "constrained optimization quality");
}

fn criterion_8_statistics_oracles(gate: &mut Gate) {
    let p = wilcoxon_ranksum(&[1.0, 2.0, 3.0], &[4.0, 5.0, 6.0]).p_value();
    gate.clause(
        "exact two-sided p for disjoint triples",
        p == Some(0.1),
        format!("p = {p:?}, expected Some(0.1)"),
    );

    let identical = wilcoxon_ranksum(&[2.0, 2.0, 2.0], &[2.0, 2.0, 2.0]);
    gate.clause(
        "identical samples flagged",
        identical == ComparisonCell::Identical && identical.p_value().is_none(),
        format!("cell = {identical:?}"),
    );

    // thirteen published sphere-benchmark means; three exact zeros tie for
    // first under 1224 competition ranking
    let means = [
        0.0, 0.0, 1.16e-98, 2.68e-47, 9.30e-15, 1.92e-05, 0.0, 2.54e-59, 1.06e+03, 4.92e-285,
        1.21e-106, 2.03e-285, 1.45e-10,
    ];
    let ranks: Vec<usize> = competition_rank(&means).iter().map(|r| r.rank).collect();
    let expected = vec![1, 1, 7, 9, 10, 12, 1, 8, 13, 5, 6, 4, 11];
    gate.clause(
        "published mean row reproduces published rank row",
        ranks == expected,
        format!("ranks = {ranks:?}"),
    );

    gate.finish(8, "statistics oracles");
}

fn criterion_9_behavioral_invariants(gate: &mut Gate) {
    // move-selection frequencies over 1e5 draws: exploit 0.2, walk 0.4,
    // peer 0.4 under the default thresholds
    let params = MfoxParams::default();
    let mut rng = RngStream::new(BASE_SEED);
    let draws = 100_000;
    let (mut exploit, mut walk, mut peer) = (0u32, 0u32, 0u32);
    for _ in 0..draws {
        let r = rng.uniform();
        if r <= params.r_exploit {
            exploit += 1;
        } else if r < params.r_walk {
            walk += 1;
        } else {
            peer += 1;
        }
    }
    let shares = [
        f64::from(exploit) / draws as f64,
        f64::from(walk) / draws as f64,
        f64::from(peer) / draws as f64,
    ];
    let ok = (shares[0] - 0.2).abs() <= 0.02
        && (shares[1] - 0.4).abs() <= 0.02
        && (shares[2] - 0.4).abs() <= 0.02;
    gate.clause(
        "move-selection frequencies",
        ok,
        format!(
            "exploit {:.4} / walk {:.4} / peer {:.4} over {draws} draws",
            shares[0], shares[1], shares[2]
        ),
    );

    // peer divisor pool draws 1 with probability 2/3
    let ones = (0..draws)
        .filter(|_| params.rn_pool[rng.index(params.rn_pool.len())] == 1.0)
        .count();
    let share = ones as f64 / draws as f64;
    gate.clause(
        "peer divisor pool frequency",
        (share - 2.0 / 3.0).abs() <= 0.01,
        format!("P(rn = 1) = {share:.4} over {draws} draws"),
    );

    // opposition points stay inside the box at 1e5 coordinate scale
    let f12 = make_benchmark("F12").unwrap();
    let bounds = f12.bounds();
    let mut contained = true;
    for _ in 0..(draws / bounds.dim()) {
        let x = random_point(&bounds, &mut rng);
        contained &= bounds.contains(&obl_opposite(&x, &bounds));
    }
    gate.clause(
        "opposition containment",
        contained,
        format!("{} reflected vectors of dim {}", draws / bounds.dim(), bounds.dim()),
    );

    // opposition init never leaves any agent worse than it started
    let mut never_worse = true;
    for id in ["F1", "F8", "F12", "F16"] {
        let problem = make_benchmark(id).unwrap();
        let mut pop = init_population(100, &problem.bounds(), &mut rng);
        for agent in &mut pop.agents {
            agent.fitness = problem.evaluate(&agent.position, &mut rng);
        }
        let before: Vec<f64> = pop.agents.iter().map(|a| a.fitness).collect();
        let mut budget = Budget::new(None);
        obl_init(&mut pop, &problem, &mut rng, &mut budget);
        never_worse &= pop
            .agents
            .iter()
            .zip(&before)
            .all(|(agent, old)| agent.fitness <= *old);
    }
    gate.clause(
        "opposition init never worsens",
        never_worse,
        "4 problems x 100 agents".into(),
    );

    // traces never increase and the best position stays inside the box
    let mut monotone = true;
    let mut in_box = true;
    let mut consistent = true;
    for id in ["F5", "F9", "F16", "spring"] {
        let problem = lookup(id, &PenaltyConfig::default()).unwrap();
        for algo in [Algorithm::Mfox, Algorithm::Fox] {
            let config = RunConfig {
                pop: 20,
                max_iterations: 200,
                fe_budget: None,
                seed: BASE_SEED,
            };
            let record = algo.run(problem.as_ref(), &config).unwrap();
            monotone &= record.trace.windows(2).all(|w| w[1].1 <= w[0].1);
            in_box &= problem.bounds().contains(&record.best_position);
            consistent &= record.trace.last().map(|t| t.1) == Some(record.best_fitness);
        }
    }
    gate.clause(
        "trace monotonicity and containment",
        monotone && in_box && consistent,
        "4 problems x 2 optimizers, 200 iterations".into(),
    );

    gate.finish(9, "behavioral invariants");
}
