//! Tours the comparison statistics: summary rows, competition and fractional
//! ranking, and exact versus approximate rank-sum p-values.

use foxopt::stats::{
    competition_rank, fractional_rank, summarize, wilcoxon_exact_p, wilcoxon_normal_p,
    wilcoxon_ranksum, ComparisonCell,
};

fn main() {
    let sample = [3.2, 1.1, 9.9, 4.6, 2.5];
    let summary = summarize(&sample);
    println!("sample {sample:?}");
    println!(
        "  mean {:.4}  std {:.4}  best {:.1}  worst {:.1}",
        summary.mean, summary.std, summary.min, summary.max
    );

    let means = [0.0, 0.0, 3.1, 0.2, 0.0, 7.4];
    let competition: Vec<usize> = competition_rank(&means).iter().map(|r| r.rank).collect();
    println!("\nmeans {means:?}");
    println!("  competition ranks {competition:?}");
    println!("  fractional ranks  {:?}", fractional_rank(&means));

    let a = [1.0, 2.0, 3.0];
    let b = [4.0, 5.0, 6.0];
    match wilcoxon_ranksum(&a, &b) {
        ComparisonCell::PValue(p) => println!("\nrank-sum {a:?} vs {b:?}: p = {p}"),
        ComparisonCell::Identical => unreachable!(),
    }
    println!(
        "identical samples marker: {:?}",
        wilcoxon_ranksum(&[2.0, 2.0], &[2.0, 2.0, 2.0])
    );

    let x = [12.1, 14.3, 11.8, 13.0, 15.2, 12.7, 14.9, 13.3];
    let y = [13.8, 15.1, 14.4, 16.0, 13.5, 15.8, 14.1, 16.3];
    println!("\nexact p  = {:.6}", wilcoxon_exact_p(&x, &y));
    println!("normal p = {:.6}", wilcoxon_normal_p(&x, &y));
}
