//! Four constrained engineering design problems (CEC2020 real-world suite
//! lineage) solved via static penalty: tension spring, pressure vessel,
//! three-bar-free gas compressor, and hydrostatic thrust bearing.

use crate::core::{Bounds, Problem, RngStream};
use serde::{Deserialize, Serialize};

/// A raw objective plus inequality constraints; `g(x) <= 0` means feasible.
pub struct ConstrainedProblem {
    name: &'static str,
    bounds: Bounds,
    raw: fn(&[f64]) -> f64,
    constraints: fn(&[f64]) -> Vec<f64>,
}

impl ConstrainedProblem {
    pub fn name(&self) -> &str {
        self.name
    }

    pub fn bounds(&self) -> Bounds {
        self.bounds.clone()
    }

    /// Objective value without any penalty.
    pub fn raw_objective(&self, x: &[f64]) -> f64 {
        (self.raw)(x)
    }

    /// Constraint values; positive entries are violations.
    pub fn constraint_values(&self, x: &[f64]) -> Vec<f64> {
        (self.constraints)(x)
    }

    /// Largest violation, 0 when fully feasible.
    pub fn max_violation(&self, x: &[f64]) -> f64 {
        self.constraint_values(x)
            .into_iter()
            .fold(0.0, f64::max)
    }

    /// Wraps the problem with a static penalty for use by the optimizers.
    pub fn penalized(self, penalty: PenaltyConfig) -> PenalizedProblem {
        PenalizedProblem {
            inner: self,
            penalty,
        }
    }
}

/// Static penalty settings: `raw + coefficient * sum(max(0, g)^exponent)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PenaltyConfig {
    pub coefficient: f64,
    pub exponent: f64,
}

impl Default for PenaltyConfig {
    fn default() -> Self {
        Self {
            coefficient: 1e10,
            exponent: 2.0,
        }
    }
}

/// Penalized objective; non-finite raw values pass through untouched so
/// domain-error sentinels stay infinitely bad.
pub fn penalize(problem: &ConstrainedProblem, x: &[f64], penalty: &PenaltyConfig) -> f64 {
    let raw = problem.raw_objective(x);
    if !raw.is_finite() {
        return raw;
    }
    let violation: f64 = problem
        .constraint_values(x)
        .into_iter()
        .map(|g| f64::max(0.0, g).powf(penalty.exponent))
        .sum();
    raw + penalty.coefficient * violation
}

/// A `ConstrainedProblem` exposed through the `Problem` trait via its penalty.
pub struct PenalizedProblem {
    inner: ConstrainedProblem,
    penalty: PenaltyConfig,
}

impl PenalizedProblem {
    pub fn inner(&self) -> &ConstrainedProblem {
        &self.inner
    }
}

impl Problem for PenalizedProblem {
    fn name(&self) -> &str {
        self.inner.name
    }

    fn dim(&self) -> usize {
        self.inner.bounds.dim()
    }

    fn bounds(&self) -> Bounds {
        self.inner.bounds()
    }

    fn evaluate(&self, x: &[f64], _rng: &mut RngStream) -> f64 {
        penalize(&self.inner, x, &self.penalty)
    }
}

fn spring_raw(x: &[f64]) -> f64 {
    let (d, big_d, n) = (x[0], x[1], x[2]);
    (n + 2.0) * big_d * d * d
}

fn spring_constraints(x: &[f64]) -> Vec<f64> {
    let (d, big_d, n) = (x[0], x[1], x[2]);
    vec![
        1.0 - big_d.powi(3) * n / (71785.0 * d.powi(4)),
        (4.0 * big_d * big_d - d * big_d) / (12566.0 * (d.powi(3) * big_d - d.powi(4)))
            + 1.0 / (5108.0 * d * d)
            - 1.0,
        1.0 - 140.45 * d / (big_d * big_d * n),
        (d + big_d) / 1.5 - 1.0,
    ]
}

/// Tension/compression spring: minimize wire volume subject to deflection,
/// shear stress, surge frequency, and diameter limits.
pub fn spring() -> ConstrainedProblem {
    ConstrainedProblem {
        name: "spring",
        bounds: Bounds::new(vec![0.05, 0.25, 2.0], vec![2.0, 1.3, 15.0]).expect("static bounds"),
        raw: spring_raw,
        constraints: spring_constraints,
    }
}

fn vessel_raw(x: &[f64]) -> f64 {
    let (ts, th, r, l) = (x[0], x[1], x[2], x[3]);
    0.6224 * ts * r * l + 1.7781 * th * r * r + 3.1661 * ts * ts * l + 19.84 * ts * ts * r
}

fn vessel_constraints(x: &[f64]) -> Vec<f64> {
    let (ts, th, r, l) = (x[0], x[1], x[2], x[3]);
    let pi = std::f64::consts::PI;
    vec![
        -ts + 0.0193 * r,
        -th + 0.00954 * r,
        -pi * r * r * l - 4.0 / 3.0 * pi * r.powi(3) + 1_296_000.0,
        l - 240.0,
    ]
}

/// Cylindrical pressure vessel with continuous shell/head thicknesses:
/// minimize material and forming cost at a required volume.
pub fn vessel() -> ConstrainedProblem {
    ConstrainedProblem {
        name: "vessel",
        bounds: Bounds::new(vec![0.0, 0.0, 10.0, 10.0], vec![100.0, 100.0, 200.0, 200.0])
            .expect("static bounds"),
        raw: vessel_raw,
        constraints: vessel_constraints,
    }
}

fn compressor_raw(x: &[f64]) -> f64 {
    let (x1, x2, x3, x4) = (x[0], x[1], x[2], x[3]);
    8.61e5 * x1.sqrt() * x2 * x3.powf(-2.0 / 3.0) * x4.powf(-0.5) + 3.69e4 * x3
        + 7.72e8 / x1 * x2.powf(0.219)
        - 765.43e6 / x1
}

fn compressor_constraints(x: &[f64]) -> Vec<f64> {
    let (x2, x4) = (x[1], x[3]);
    vec![x4 / (x2 * x2) + 1.0 / (x2 * x2) - 1.0]
}

/// Gas transmission compressor design: minimize operating cost over station
/// spacing, compression ratio, pipe parameter, and flow variable.
pub fn compressor() -> ConstrainedProblem {
    ConstrainedProblem {
        name: "compressor",
        bounds: Bounds::new(vec![20.0, 1.0, 20.0, 0.1], vec![50.0, 10.0, 50.0, 60.0])
            .expect("static bounds"),
        raw: compressor_raw,
        constraints: compressor_constraints,
    }
}

/// Intermediate quantities shared by the bearing objective and constraints.
struct BearingState {
    del_t: f64,
    ef: f64,
    h: f64,
    p0: f64,
    w: f64,
}

fn bearing_state(x: &[f64]) -> Option<BearingState> {
    let (r, r0, mu, q) = (x[0], x[1], x[2], x[3]);
    if r <= r0 || mu <= 0.0 {
        return None;
    }
    let pi = std::f64::consts::PI;
    // oil temperature rise from the lubricant viscosity-temperature relation
    let ll = (8.122e6 * mu + 0.8).log10().log10();
    let p = (ll - 10.04) / (-3.55);
    let del_t = 2.0 * (10f64.powf(p) - 560.0);
    let ef = 9336.0 * q * 0.0307 * 0.5 * del_t;
    let h = (2.0 * pi * 750.0 / 60.0).powi(2) * (2.0 * pi * mu / ef)
        * (r.powi(4) - r0.powi(4))
        / 4.0;
    let ln_ratio = (r / r0).ln();
    let p0 = (6.0 * mu * q / (pi * h.powi(3))) * ln_ratio;
    let w = pi * p0 / 2.0 * (r * r - r0 * r0) / ln_ratio;
    let state = BearingState { del_t, ef, h, p0, w };
    if state.h.is_finite() && state.p0.is_finite() && state.w.is_finite() {
        Some(state)
    } else {
        None
    }
}

fn bearing_raw(x: &[f64]) -> f64 {
    let q = x[3];
    match bearing_state(x) {
        // power loss in ft-lb/s: pumping power plus friction heat
        Some(s) => (q * s.p0 / 0.7 + s.ef) / 12.0,
        None => f64::INFINITY,
    }
}

fn bearing_constraints(x: &[f64]) -> Vec<f64> {
    let (r, r0, q) = (x[0], x[1], x[3]);
    let pi = std::f64::consts::PI;
    match bearing_state(x) {
        Some(s) => vec![
            101_000.0 - s.w,
            s.p0 - 1000.0,
            s.del_t - 50.0,
            0.001 - s.h,
            r0 - r,
            0.0307 / (386.4 * s.p0) * (q / (2.0 * pi * r * s.h)) - 0.001,
            s.w / (pi * (r * r - r0 * r0)) - 5000.0,
        ],
        None => vec![f64::INFINITY; 7],
    }
}

/// Hydrostatic thrust bearing: minimize power loss over ring radii, oil
/// viscosity, and flow rate, against load, pressure, temperature, film
/// thickness, and exit-velocity limits.
pub fn bearing() -> ConstrainedProblem {
    ConstrainedProblem {
        name: "bearing",
        bounds: Bounds::new(
            vec![1.0, 1.0, 1e-6, 1.0],
            vec![16.0, 16.0, 16e-6, 16.0],
        )
        .expect("static bounds"),
        raw: bearing_raw,
        constraints: bearing_constraints,
    }
}

/// The four problems in registry order.
pub fn engineering_ids() -> Vec<&'static str> {
    vec!["spring", "vessel", "compressor", "bearing"]
}

/// Builds an engineering problem by id.
pub fn make_engineering(id: &str) -> crate::core::Result<ConstrainedProblem> {
    match id {
        "spring" => Ok(spring()),
        "vessel" => Ok(vessel()),
        "compressor" => Ok(compressor()),
        "bearing" => Ok(bearing()),
        _ => Err(crate::core::Error::UnknownProblem(id.to_string())),
    }
}
