//! Run statistics: summaries, competition/fractional ranking of algorithm
//! means, and the two-sided Wilcoxon rank-sum test.

use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, Normal};

/// Mean, sample standard deviation, and extremes of a set of run results.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub mean: f64,
    pub std: f64,
    pub min: f64,
    pub max: f64,
}

/// Summarizes final fitness values; std uses the n-1 divisor (0 for a single run).
pub fn summarize(values: &[f64]) -> Summary {
    assert!(!values.is_empty(), "cannot summarize an empty slice");
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let std = if values.len() < 2 {
        0.0
    } else {
        (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
    };
    let min = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    Summary { mean, std, min, max }
}

/// Position in a competition ("1224") ranking; `nan` marks unrankable entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rank {
    pub rank: usize,
    pub nan: bool,
}

/// Competition ranking: rank = 1 + number of strictly better entries.
///
/// Ties share a rank and the next distinct value skips the tied slots.
/// NaN entries sort behind every number and are flagged.
pub fn competition_rank(values: &[f64]) -> Vec<Rank> {
    let finite_count = values.iter().filter(|v| !v.is_nan()).count();
    values
        .iter()
        .map(|&v| {
            if v.is_nan() {
                Rank {
                    rank: finite_count + 1,
                    nan: true,
                }
            } else {
                let better = values.iter().filter(|&&o| !o.is_nan() && o < v).count();
                Rank {
                    rank: better + 1,
                    nan: false,
                }
            }
        })
        .collect()
}

/// Fractional ("average") ranks: tied entries share the mean of their positions.
pub fn fractional_rank(values: &[f64]) -> Vec<f64> {
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap());
    let mut ranks = vec![0.0; n];
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        let avg = (i + j + 2) as f64 / 2.0;
        for &idx in &order[i..=j] {
            ranks[idx] = avg;
        }
        i = j + 1;
    }
    ranks
}

/// Outcome of comparing two samples; identical samples have no defined p-value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum ComparisonCell {
    PValue(f64),
    Identical,
}

impl ComparisonCell {
    pub fn p_value(&self) -> Option<f64> {
        match self {
            ComparisonCell::PValue(p) => Some(*p),
            ComparisonCell::Identical => None,
        }
    }
}

/// Sample-size ceiling for the exact permutation distribution.
const EXACT_LIMIT: usize = 16;

/// Two-sided Wilcoxon rank-sum test.
///
/// Samples whose union holds a single distinct value are reported as
/// `Identical`. Small cases (n+m <= 16) use the exact conditional permutation
/// distribution; larger ones the tie-corrected normal approximation with
/// continuity correction.
pub fn wilcoxon_ranksum(a: &[f64], b: &[f64]) -> ComparisonCell {
    assert!(!a.is_empty() && !b.is_empty(), "samples must be non-empty");
    let first = a[0];
    if a.iter().chain(b).all(|&v| v == first) {
        return ComparisonCell::Identical;
    }
    if a.len() + b.len() <= EXACT_LIMIT {
        ComparisonCell::PValue(wilcoxon_exact_p(a, b))
    } else {
        ComparisonCell::PValue(wilcoxon_normal_p(a, b))
    }
}

/// Average ranks of the pooled samples, doubled so ties stay integral.
fn doubled_ranks(a: &[f64], b: &[f64]) -> Vec<u64> {
    let pooled: Vec<f64> = a.iter().chain(b).cloned().collect();
    let fractional = fractional_rank(&pooled);
    fractional.iter().map(|r| (2.0 * r).round() as u64).collect()
}

/// Exact two-sided p-value from the permutation distribution of the rank sum.
///
/// Enumerates all ways to assign the pooled (tied) ranks to the first sample
/// by dynamic programming over doubled ranks, then doubles the smaller tail.
pub fn wilcoxon_exact_p(a: &[f64], b: &[f64]) -> f64 {
    let ranks = doubled_ranks(a, b);
    let n = a.len();
    let w_obs: u64 = ranks[..n].iter().sum();
    let max_sum: usize = ranks.iter().map(|&r| r as usize).sum();

    // count[k][s] = subsets of size k of the pooled ranks with doubled-rank sum s
    let mut count = vec![vec![0.0f64; max_sum + 1]; n + 1];
    count[0][0] = 1.0;
    for &r in &ranks {
        let r = r as usize;
        for k in (0..n).rev() {
            for s in (0..=max_sum - r).rev() {
                if count[k][s] > 0.0 {
                    let add = count[k][s];
                    count[k + 1][s + r] += add;
                }
            }
        }
    }

    let total: f64 = count[n].iter().sum();
    let le: f64 = count[n][..=w_obs as usize].iter().sum();
    let ge: f64 = count[n][w_obs as usize..].iter().sum();
    (2.0 * (le / total).min(ge / total)).min(1.0)
}

/// Normal approximation with tie-corrected variance and continuity correction.
pub fn wilcoxon_normal_p(a: &[f64], b: &[f64]) -> f64 {
    let n = a.len() as f64;
    let m = b.len() as f64;
    let big_n = n + m;
    let pooled: Vec<f64> = a.iter().chain(b).cloned().collect();
    let ranks = fractional_rank(&pooled);
    let w: f64 = ranks[..a.len()].iter().sum();
    let expected = n * (big_n + 1.0) / 2.0;

    // tie correction: sum of t^3 - t over groups of tied values
    let mut sorted = pooled.clone();
    sorted.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let mut tie_term = 0.0;
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j + 1 < sorted.len() && sorted[j + 1] == sorted[i] {
            j += 1;
        }
        let t = (j - i + 1) as f64;
        tie_term += t * t * t - t;
        i = j + 1;
    }

    let variance = n * m / 12.0 * ((big_n + 1.0) - tie_term / (big_n * (big_n - 1.0)));
    if variance <= 0.0 {
        return 1.0;
    }
    let diff = w - expected;
    // continuity correction shifts the statistic half a step toward the mean
    let corrected = if diff > 0.0 {
        diff - 0.5
    } else if diff < 0.0 {
        diff + 0.5
    } else {
        return 1.0;
    };
    let z = corrected / variance.sqrt();
    let normal = Normal::new(0.0, 1.0).expect("unit normal");
    (2.0 * (1.0 - normal.cdf(z.abs()))).clamp(0.0, 1.0)
}
