//! Compare the closed-form moment approximation against exact series
//! summation, and demonstrate quantile inversion.
//!
//! Run with: cargo run --example moments_and_quantiles

use dslogistic::DiscreteSkewLogistic;

fn main() {
    println!(
        "{:>6} {:>6} {:>12} {:>12} {:>12} {:>12}",
        "p", "q", "mean(approx)", "mean(exact)", "var(approx)", "var(exact)"
    );
    for (p, q) in [
        (0.25, 0.25),
        (0.5, 0.5),
        (0.75, 0.25),
        (0.25, 0.75),
        (0.515, 0.719),
    ] {
        let d = DiscreteSkewLogistic::new(p, q).unwrap();
        let approx = d.mean_variance_approx();
        let exact = d.mean_variance_exact(1e-10).unwrap();
        println!(
            "{p:>6} {q:>6} {:>12.6} {:>12.6} {:>12.6} {:>12.6}",
            approx.mean, exact.mean, approx.variance, exact.variance
        );
    }

    let d = DiscreteSkewLogistic::new(0.6, 0.35).unwrap();
    println!("\nquantiles of DSLogistic(0.6, 0.35):");
    for gamma in [0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99] {
        let x = d.quantile(gamma).unwrap();
        println!(
            "  gamma {gamma:>5}: x = {x:>3}   cdf(x-1) = {:.4} < {gamma} <= cdf(x) = {:.4}",
            d.cdf(x - 1),
            d.cdf(x)
        );
    }
}
