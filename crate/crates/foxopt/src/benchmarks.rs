//! The 23 classical benchmark functions (sphere through Shekel) addressable
//! as "F1".."F23", plus their documented optima for verification.

use crate::core::{Bounds, Error, Problem, Result, RngStream};

/// Objective body: most functions are pure, F7 draws additive noise per call.
#[derive(Clone, Copy)]
enum Eval {
    Pure(fn(&[f64]) -> f64),
    Seeded(fn(&[f64], &mut RngStream) -> f64),
}

/// One classical test function with its standard dimension and box.
pub struct Benchmark {
    name: &'static str,
    dim: usize,
    bounds: Bounds,
    eval: Eval,
}

impl Problem for Benchmark {
    fn name(&self) -> &str {
        self.name
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn bounds(&self) -> Bounds {
        self.bounds.clone()
    }

    fn evaluate(&self, x: &[f64], rng: &mut RngStream) -> f64 {
        match self.eval {
            Eval::Pure(f) => f(x),
            Eval::Seeded(f) => f(x, rng),
        }
    }
}

fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

fn abs_sum_plus_product(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|v| v.abs()).sum();
    let product: f64 = x.iter().map(|v| v.abs()).product();
    sum + product
}

fn rotated_hyper_ellipsoid(x: &[f64]) -> f64 {
    let mut total = 0.0;
    let mut prefix = 0.0;
    for &v in x {
        prefix += v;
        total += prefix * prefix;
    }
    total
}

fn max_abs(x: &[f64]) -> f64 {
    x.iter().fold(0.0, |acc, v| acc.max(v.abs()))
}

fn rosenbrock(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (w[0] - 1.0).powi(2))
        .sum()
}

fn shifted_quadratic(x: &[f64]) -> f64 {
    x.iter().map(|v| (v + 0.5).powi(2)).sum()
}

fn noisy_quartic(x: &[f64], rng: &mut RngStream) -> f64 {
    let quartic: f64 = x
        .iter()
        .enumerate()
        .map(|(i, v)| (i + 1) as f64 * v.powi(4))
        .sum();
    quartic + rng.uniform()
}

fn schwefel(x: &[f64]) -> f64 {
    x.iter().map(|v| -v * v.abs().sqrt().sin()).sum()
}

fn rastrigin(x: &[f64]) -> f64 {
    x.iter()
        .map(|v| v * v - 10.0 * (2.0 * std::f64::consts::PI * v).cos() + 10.0)
        .sum()
}

fn ackley(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let sum_sq: f64 = x.iter().map(|v| v * v).sum();
    let sum_cos: f64 = x
        .iter()
        .map(|v| (2.0 * std::f64::consts::PI * v).cos())
        .sum();
    -20.0 * (-0.2 * (sum_sq / n).sqrt()).exp() - (sum_cos / n).exp()
        + 20.0
        + std::f64::consts::E
}

fn griewank(x: &[f64]) -> f64 {
    let sum_sq: f64 = x.iter().map(|v| v * v).sum();
    let product: f64 = x
        .iter()
        .enumerate()
        .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos())
        .product();
    sum_sq / 4000.0 - product + 1.0
}

/// Boundary penalty term shared by the two penalized functions.
fn u_penalty(x: &[f64], a: f64, k: f64, m: i32) -> f64 {
    x.iter()
        .map(|&v| {
            if v > a {
                k * (v - a).powi(m)
            } else if v < -a {
                k * (-v - a).powi(m)
            } else {
                0.0
            }
        })
        .sum()
}

fn penalized_1(x: &[f64]) -> f64 {
    let pi = std::f64::consts::PI;
    let n = x.len();
    let y: Vec<f64> = x.iter().map(|&v| 1.0 + (v + 1.0) / 4.0).collect();
    let mut s = 10.0 * (pi * y[0]).sin().powi(2);
    for i in 0..n - 1 {
        s += (y[i] - 1.0).powi(2) * (1.0 + 10.0 * (pi * y[i + 1]).sin().powi(2));
    }
    s += (y[n - 1] - 1.0).powi(2);
    pi / n as f64 * s + u_penalty(x, 10.0, 100.0, 4)
}

fn penalized_2(x: &[f64]) -> f64 {
    let pi = std::f64::consts::PI;
    let n = x.len();
    let mut s = (3.0 * pi * x[0]).sin().powi(2);
    for i in 0..n - 1 {
        s += (x[i] - 1.0).powi(2) * (1.0 + (3.0 * pi * x[i + 1]).sin().powi(2));
    }
    s += (x[n - 1] - 1.0).powi(2) * (1.0 + (2.0 * pi * x[n - 1]).sin().powi(2));
    0.1 * s + u_penalty(x, 5.0, 100.0, 4)
}

/// Foxholes grid: 25 columns over {-32,-16,0,16,32}².
const FOXHOLES_STEPS: [f64; 5] = [-32.0, -16.0, 0.0, 16.0, 32.0];

fn foxholes(x: &[f64]) -> f64 {
    let mut s = 1.0 / 500.0;
    for j in 0..25 {
        let a1 = FOXHOLES_STEPS[j % 5];
        let a2 = FOXHOLES_STEPS[j / 5];
        let d = (x[0] - a1).powi(6) + (x[1] - a2).powi(6);
        s += 1.0 / ((j + 1) as f64 + d);
    }
    1.0 / s
}

const KOWALIK_A: [f64; 11] = [
    0.1957, 0.1947, 0.1735, 0.16, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246,
];
const KOWALIK_B_INV: [f64; 11] = [0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0];

fn kowalik(x: &[f64]) -> f64 {
    KOWALIK_A
        .iter()
        .zip(&KOWALIK_B_INV)
        .map(|(&a, &b_inv)| {
            let b = 1.0 / b_inv;
            let model = x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
            (a - model).powi(2)
        })
        .sum()
}

fn six_hump_camel(x: &[f64]) -> f64 {
    let (x1, x2) = (x[0], x[1]);
    4.0 * x1.powi(2) - 2.1 * x1.powi(4) + x1.powi(6) / 3.0 + x1 * x2 - 4.0 * x2.powi(2)
        + 4.0 * x2.powi(4)
}

fn branin(x: &[f64]) -> f64 {
    let pi = std::f64::consts::PI;
    let (x1, x2) = (x[0], x[1]);
    (x2 - 5.1 * x1 * x1 / (4.0 * pi * pi) + 5.0 * x1 / pi - 6.0).powi(2)
        + 10.0 * (1.0 - 1.0 / (8.0 * pi)) * x1.cos()
        + 10.0
}

fn goldstein_price(x: &[f64]) -> f64 {
    let (x1, x2) = (x[0], x[1]);
    let a = 1.0
        + (x1 + x2 + 1.0).powi(2)
            * (19.0 - 14.0 * x1 + 3.0 * x1 * x1 - 14.0 * x2 + 6.0 * x1 * x2 + 3.0 * x2 * x2);
    let b = 30.0
        + (2.0 * x1 - 3.0 * x2).powi(2)
            * (18.0 - 32.0 * x1 + 12.0 * x1 * x1 + 48.0 * x2 - 36.0 * x1 * x2 + 27.0 * x2 * x2);
    a * b
}

const HARTMANN_ALPHA: [f64; 4] = [1.0, 1.2, 3.0, 3.2];
const HARTMANN3_A: [[f64; 3]; 4] = [
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
];
const HARTMANN3_P: [[f64; 3]; 4] = [
    [0.3689, 0.1170, 0.2673],
    [0.4699, 0.4387, 0.7470],
    [0.1091, 0.8732, 0.5547],
    [0.0381, 0.5743, 0.8828],
];

fn hartmann_3(x: &[f64]) -> f64 {
    -(0..4)
        .map(|i| {
            let e: f64 = (0..3)
                .map(|j| HARTMANN3_A[i][j] * (x[j] - HARTMANN3_P[i][j]).powi(2))
                .sum();
            HARTMANN_ALPHA[i] * (-e).exp()
        })
        .sum::<f64>()
}

const HARTMANN6_A: [[f64; 6]; 4] = [
    [10.0, 3.0, 17.0, 3.5, 1.7, 8.0],
    [0.05, 10.0, 17.0, 0.1, 8.0, 14.0],
    [3.0, 3.5, 1.7, 10.0, 17.0, 8.0],
    [17.0, 8.0, 0.05, 10.0, 0.1, 14.0],
];
const HARTMANN6_P: [[f64; 6]; 4] = [
    [0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886],
    [0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991],
    [0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650],
    [0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381],
];

fn hartmann_6(x: &[f64]) -> f64 {
    -(0..4)
        .map(|i| {
            let e: f64 = (0..6)
                .map(|j| HARTMANN6_A[i][j] * (x[j] - HARTMANN6_P[i][j]).powi(2))
                .sum();
            HARTMANN_ALPHA[i] * (-e).exp()
        })
        .sum::<f64>()
}

const SHEKEL_A: [[f64; 4]; 10] = [
    [4.0, 4.0, 4.0, 4.0],
    [1.0, 1.0, 1.0, 1.0],
    [8.0, 8.0, 8.0, 8.0],
    [6.0, 6.0, 6.0, 6.0],
    [3.0, 7.0, 3.0, 7.0],
    [2.0, 9.0, 2.0, 9.0],
    [5.0, 5.0, 3.0, 3.0],
    [8.0, 1.0, 8.0, 1.0],
    [6.0, 2.0, 6.0, 2.0],
    [7.0, 3.6, 7.0, 3.6],
];
const SHEKEL_C: [f64; 10] = [0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5];

fn shekel(m: usize, x: &[f64]) -> f64 {
    -(0..m)
        .map(|i| {
            let d: f64 = x
                .iter()
                .zip(&SHEKEL_A[i])
                .map(|(&xi, &ai)| (xi - ai).powi(2))
                .sum();
            1.0 / (d + SHEKEL_C[i])
        })
        .sum::<f64>()
}

fn shekel_5(x: &[f64]) -> f64 {
    shekel(5, x)
}

fn shekel_7(x: &[f64]) -> f64 {
    shekel(7, x)
}

fn shekel_10(x: &[f64]) -> f64 {
    shekel(10, x)
}

struct Entry {
    id: &'static str,
    name: &'static str,
    dim: usize,
    lower: &'static [f64],
    upper: &'static [f64],
    eval: Eval,
}

const UNIFORM_100: (&[f64], &[f64]) = (&[-100.0], &[100.0]);

/// `lower`/`upper` with a single element are replicated across `dim`.
const TABLE: [Entry; 23] = [
    Entry { id: "F1", name: "sphere", dim: 30, lower: UNIFORM_100.0, upper: UNIFORM_100.1, eval: Eval::Pure(sphere) },
    Entry { id: "F2", name: "abs-sum-product", dim: 30, lower: &[-10.0], upper: &[10.0], eval: Eval::Pure(abs_sum_plus_product) },
    Entry { id: "F3", name: "rotated-hyper-ellipsoid", dim: 30, lower: UNIFORM_100.0, upper: UNIFORM_100.1, eval: Eval::Pure(rotated_hyper_ellipsoid) },
    Entry { id: "F4", name: "max-abs", dim: 30, lower: UNIFORM_100.0, upper: UNIFORM_100.1, eval: Eval::Pure(max_abs) },
    Entry { id: "F5", name: "rosenbrock", dim: 30, lower: &[-30.0], upper: &[30.0], eval: Eval::Pure(rosenbrock) },
    Entry { id: "F6", name: "shifted-quadratic", dim: 30, lower: UNIFORM_100.0, upper: UNIFORM_100.1, eval: Eval::Pure(shifted_quadratic) },
    Entry { id: "F7", name: "noisy-quartic", dim: 30, lower: &[-1.28], upper: &[1.28], eval: Eval::Seeded(noisy_quartic) },
    Entry { id: "F8", name: "schwefel", dim: 30, lower: &[-500.0], upper: &[500.0], eval: Eval::Pure(schwefel) },
    Entry { id: "F9", name: "rastrigin", dim: 30, lower: &[-5.12], upper: &[5.12], eval: Eval::Pure(rastrigin) },
    Entry { id: "F10", name: "ackley", dim: 30, lower: &[-32.0], upper: &[32.0], eval: Eval::Pure(ackley) },
    Entry { id: "F11", name: "griewank", dim: 30, lower: &[-600.0], upper: &[600.0], eval: Eval::Pure(griewank) },
    Entry { id: "F12", name: "penalized-1", dim: 30, lower: &[-50.0], upper: &[50.0], eval: Eval::Pure(penalized_1) },
    Entry { id: "F13", name: "penalized-2", dim: 30, lower: &[-50.0], upper: &[50.0], eval: Eval::Pure(penalized_2) },
    Entry { id: "F14", name: "shekel-foxholes", dim: 2, lower: &[-65.0], upper: &[65.0], eval: Eval::Pure(foxholes) },
    Entry { id: "F15", name: "kowalik", dim: 4, lower: &[-5.0], upper: &[5.0], eval: Eval::Pure(kowalik) },
    Entry { id: "F16", name: "six-hump-camel", dim: 2, lower: &[-5.0], upper: &[5.0], eval: Eval::Pure(six_hump_camel) },
    Entry { id: "F17", name: "branin", dim: 2, lower: &[-5.0, 0.0], upper: &[10.0, 15.0], eval: Eval::Pure(branin) },
    Entry { id: "F18", name: "goldstein-price", dim: 2, lower: &[-2.0], upper: &[2.0], eval: Eval::Pure(goldstein_price) },
    Entry { id: "F19", name: "hartmann-3", dim: 3, lower: &[0.0], upper: &[1.0], eval: Eval::Pure(hartmann_3) },
    Entry { id: "F20", name: "hartmann-6", dim: 6, lower: &[0.0], upper: &[1.0], eval: Eval::Pure(hartmann_6) },
    Entry { id: "F21", name: "shekel-5", dim: 4, lower: &[0.0], upper: &[10.0], eval: Eval::Pure(shekel_5) },
    Entry { id: "F22", name: "shekel-7", dim: 4, lower: &[0.0], upper: &[10.0], eval: Eval::Pure(shekel_7) },
    Entry { id: "F23", name: "shekel-10", dim: 4, lower: &[0.0], upper: &[10.0], eval: Eval::Pure(shekel_10) },
];

fn entry(id: &str) -> Result<&'static Entry> {
    let upper = id.to_ascii_uppercase();
    TABLE
        .iter()
        .find(|e| e.id == upper)
        .ok_or_else(|| Error::UnknownProblem(id.to_string()))
}

fn expand(values: &[f64], dim: usize) -> Vec<f64> {
    if values.len() == 1 {
        vec![values[0]; dim]
    } else {
        values.to_vec()
    }
}

/// All benchmark ids in suite order.
pub fn benchmark_ids() -> Vec<&'static str> {
    TABLE.iter().map(|e| e.id).collect()
}

/// Builds the named benchmark ("F1".."F23", case-insensitive).
pub fn make_benchmark(id: &str) -> Result<Benchmark> {
    let e = entry(id)?;
    Ok(Benchmark {
        name: e.name,
        dim: e.dim,
        bounds: Bounds::new(expand(e.lower, e.dim), expand(e.upper, e.dim))?,
        eval: e.eval,
    })
}

/// Documented minimum: the optimizer position where standard, and the minimum value.
///
/// F7's noise term has no attainable fixed minimum point, so its position is `None`.
pub fn benchmark_optimum(id: &str) -> Result<(Option<Vec<f64>>, f64)> {
    let e = entry(id)?;
    let spread = |v: f64| Some(vec![v; e.dim]);
    Ok(match e.id {
        "F1" | "F2" | "F3" | "F4" | "F9" | "F10" | "F11" => (spread(0.0), 0.0),
        "F5" => (spread(1.0), 0.0),
        "F6" => (spread(-0.5), 0.0),
        "F7" => (None, 0.0),
        "F8" => (spread(420.9687), -12569.487),
        "F12" => (spread(-1.0), 0.0),
        "F13" => (spread(1.0), 0.0),
        "F14" => (Some(vec![-32.0, -32.0]), 0.998004),
        "F15" => (Some(vec![0.1928, 0.1908, 0.1231, 0.1358]), 0.0003075),
        "F16" => (Some(vec![0.0898, -0.7126]), -1.0316285),
        "F17" => (Some(vec![std::f64::consts::PI, 2.275]), 0.397887),
        "F18" => (Some(vec![0.0, -1.0]), 3.0),
        "F19" => (Some(vec![0.114614, 0.555649, 0.852547]), -3.86278),
        "F20" => (
            Some(vec![0.20169, 0.150011, 0.476874, 0.275332, 0.311652, 0.6573]),
            -3.32237,
        ),
        "F21" => (spread(4.0), -10.1532),
        "F22" => (spread(4.0), -10.4028),
        "F23" => (spread(4.0), -10.5363),
        _ => unreachable!(),
    })
}
