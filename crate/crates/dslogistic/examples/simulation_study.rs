//! Run a desk-scale slice of the Monte Carlo study and print the cells in
//! the study-table layout.
//!
//! Run with: cargo run --release --example simulation_study

use dslogistic::simulation::{csv_header, run_scenario, study_grid, Scenario};
use dslogistic::DiscreteSkewLogistic;

fn main() {
    // One scenario in detail.
    let params = DiscreteSkewLogistic::new(0.25, 0.25).unwrap();
    let sc = Scenario::new(params, 100, 200, 2016);
    let report = run_scenario(&sc);
    let ml = report.ml.as_ref().unwrap();
    println!("scenario (p=0.25, q=0.25, n=100), 200 replicates:");
    println!(
        "  ML   bias ({:+.4}, {:+.4})  mse ({:.4}, {:.4})  aw ({:.4}, {:.4})  coverage ({:.3}, {:.3})",
        ml.bias_p.value,
        ml.bias_q.value,
        ml.mse_p.value,
        ml.mse_q.value,
        ml.aw_p.value,
        ml.aw_q.value,
        ml.cp_p,
        ml.cp_q
    );
    if let Some(mop) = &report.mop {
        println!(
            "  MP   bias ({:+.4}, {:+.4})  mse ({:.4}, {:.4})   [{} of {} replicates applicable]",
            mop.bias_p.value,
            mop.bias_q.value,
            mop.mse_p.value,
            mop.mse_q.value,
            mop.used,
            report.replicates
        );
    }

    // A small grid in CSV form: the (p=0.25, q=0.25) row for all n.
    println!("\n{}", csv_header());
    for sc in study_grid(200, 2016).into_iter().take(4) {
        println!("{}", run_scenario(&sc).csv_row());
    }
}
