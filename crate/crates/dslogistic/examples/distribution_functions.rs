//! Evaluate the distribution functions over a window of integers and show
//! how skewness moves the mode and median.
//!
//! Run with: cargo run --example distribution_functions

use dslogistic::report::eval_table;
use dslogistic::DiscreteSkewLogistic;

fn main() {
    for (p, q) in [(0.5, 0.5), (0.75, 0.25), (0.25, 0.75)] {
        let d = DiscreteSkewLogistic::new(p, q).unwrap();
        println!("DSLogistic(p={p}, q={q})");
        println!("  mode   = {:?}", d.mode());
        println!("  median = {}", d.median());
        print!("{}", eval_table(&d, -5, 5));
        println!();
    }

    // The location parameter translates everything rigidly.
    let shifted = DiscreteSkewLogistic::with_location(0.75, 0.25, 7).unwrap();
    println!(
        "with location 7: mode {:?}, median {}, pmf(7) = {:.6}",
        shifted.mode(),
        shifted.median(),
        shifted.pmf(7)
    );
}
