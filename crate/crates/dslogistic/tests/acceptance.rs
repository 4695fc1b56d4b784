//! Acceptance suite: each test is one criterion and prints a PASS line;
//! the per-test result line doubles as the pass/fail report.

use std::time::Instant;

use dslogistic::dataset::{Dataset, Transform, FOX_RIVER_SHIFT};
use dslogistic::estimation::{
    fit_mle, fit_mop, loglik, observed_info, score, FitOptions, IntSample,
};
use dslogistic::gof::{chi_square_gof, two_sample_chi_square};
use dslogistic::sampling::{sample_floor_continuous, sample_inversion};
use dslogistic::simulation::{run_scenario, study_grid, Scenario};
use dslogistic::{DiscreteSkewLogistic, Error, MopFailure, SeededStream};

fn grid9() -> Vec<f64> {
    (1..=9).map(|i| i as f64 / 10.0).collect()
}

/// Parse a `value(se)` cell of the comparison table.
fn split_cell(cell: &str) -> (f64, Option<f64>) {
    match cell.split_once('(') {
        None => (cell.parse().expect("estimate"), None),
        Some((v, rest)) => (
            v.parse().expect("estimate"),
            Some(rest.trim_end_matches(')').parse().expect("standard error")),
        ),
    }
}

#[test]
fn criterion_1_fox_river_reproduction() {
    let started = Instant::now();
    let exe = env!("CARGO_BIN_EXE_dslogistic");
    let output = std::process::Command::new(exe)
        .args([
            "fit",
            "--builtin",
            "fox-river",
            "--model",
            "all",
            "--shift",
            "11.5",
        ])
        .output()
        .expect("binary runs");
    assert!(
        output.status.success(),
        "fit exited with {:?}",
        output.status
    );
    let stdout = String::from_utf8(output.stdout).expect("utf8");

    let mut cells = std::collections::HashMap::new();
    for line in stdout.lines().filter(|l| !l.starts_with('#')) {
        let fields: Vec<&str> = line.split(',').collect();
        cells.insert(fields[0].to_string(), fields[1..].to_vec().join(","));
    }
    // Column order: dslogistic, dlog, dlaplace, dnorm.
    let p_row: Vec<&str> = cells["p"].split(',').collect();
    let q_row: Vec<&str> = cells["q"].split(',').collect();
    let ll_row: Vec<f64> = cells["logL"]
        .split(',')
        .map(|v| v.parse().unwrap())
        .collect();

    let (p_hat, p_se) = split_cell(p_row[0]);
    let (q_hat, q_se) = split_cell(q_row[0]);
    assert!((p_hat - 0.515).abs() <= 0.01, "p_hat {p_hat}");
    assert!((q_hat - 0.719).abs() <= 0.01, "q_hat {q_hat}");
    assert!((p_se.unwrap() - 0.073).abs() <= 0.01, "se_p {p_se:?}");
    assert!((q_se.unwrap() - 0.038).abs() <= 0.01, "se_q {q_se:?}");
    assert!(
        (ll_row[0] - -92.29).abs() <= 0.05,
        "dslogistic logL {}",
        ll_row[0]
    );
    assert!(
        (ll_row[1] - -94.62).abs() <= 0.05,
        "dlog logL {}",
        ll_row[1]
    );
    assert!(
        (ll_row[2] - -94.38).abs() <= 0.05,
        "dlaplace logL {}",
        ll_row[2]
    );
    assert!(
        (ll_row[3] - -93.57).abs() <= 0.05,
        "dnorm logL {}",
        ll_row[3]
    );
    // The proposed model wins on log-likelihood.
    assert!(ll_row[1..].iter().all(|&c| ll_row[0] > c));

    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}");
    println!("PASS criterion 1: Fox River comparison table reproduced in {elapsed:?}");
}

#[test]
fn criterion_2_simulation_trends_and_full_profile_row() {
    // Desk scale: the whole 36-cell grid at 200 replicates.
    let started = Instant::now();
    let grid = study_grid(200, 2016);
    let reports: Vec<_> = grid.iter().map(run_scenario).collect();
    let desk_elapsed = started.elapsed();
    assert!(
        desk_elapsed.as_secs_f64() < 600.0,
        "desk profile took {desk_elapsed:?}"
    );

    let cell = |n: usize| {
        reports
            .iter()
            .find(|r| r.p == 0.25 && r.q == 0.25 && r.n == n)
            .and_then(|r| r.ml.as_ref())
            .expect("cell present")
    };
    let (small, large) = (cell(25), cell(100));
    assert!(large.bias_p.value.abs() < small.bias_p.value.abs());
    assert!(large.bias_q.value.abs() < small.bias_q.value.abs());
    assert!(large.mse_p.value < small.mse_p.value);
    assert!(large.mse_q.value < small.mse_q.value);
    assert!(
        large.mse_p.value >= 0.0007 && large.mse_p.value <= 0.0021,
        "mse(p) at n=100: {}",
        large.mse_p.value
    );

    // Full profile: 1000 replicates of the same scenario, compared to the
    // reference row within 3 Monte Carlo standard errors of our cells.
    let params = DiscreteSkewLogistic::new(0.25, 0.25).unwrap();
    let full = run_scenario(&Scenario::new(params, 100, 1000, 2016));
    let ml = full.ml.expect("converged replicates");
    let close = |cell: &dslogistic::simulation::CellStat, target: f64, label: &str| {
        assert!(
            (cell.value - target).abs() <= 3.0 * cell.mc_se,
            "{label}: {} vs {target} (3 mc_se = {})",
            cell.value,
            3.0 * cell.mc_se
        );
    };
    close(&ml.bias_p, -0.0035, "bias(p)");
    close(&ml.bias_q, -0.0031, "bias(q)");
    close(&ml.mse_p, 0.0014, "mse(p)");
    close(&ml.mse_q, 0.0014, "mse(q)");
    close(&ml.aw_p, 0.1467, "aw(p)");
    close(&ml.aw_q, 0.1468, "aw(q)");
    println!(
        "PASS criterion 2: bias/mse shrink from n=25 to n=100; full-profile row matches \
         (desk grid in {desk_elapsed:?})"
    );
}

#[test]
fn criterion_3_coverage_at_half_half() {
    let params = DiscreteSkewLogistic::new(0.5, 0.5).unwrap();
    let report = run_scenario(&Scenario::new(params, 100, 1000, 909));
    let ml = report.ml.expect("converged replicates");
    for (label, cp) in [("p", ml.cp_p), ("q", ml.cp_q)] {
        assert!((0.92..=0.975).contains(&cp), "coverage for {label}: {cp}");
    }
    println!(
        "PASS criterion 3: coverage at (0.5, 0.5, n=100) is ({:.3}, {:.3})",
        ml.cp_p, ml.cp_q
    );
}

#[test]
fn criterion_4_discretization_identity_and_normalization() {
    let mut rng = SeededStream::new(4);
    for _ in 0..1000 {
        let p = 0.05 + 0.9 * rng.next_open01();
        let q = 0.05 + 0.9 * rng.next_open01();
        let x = (rng.next_u64() % 61) as i64 - 30;
        let d = DiscreteSkewLogistic::new(p, q).unwrap();
        let c = d.to_continuous();
        let oracle = c.sf(x as f64) - c.sf(x as f64 + 1.0);
        assert!(
            (d.pmf(x) - oracle).abs() < 1e-12,
            "pmf({x}) at ({p},{q}): {} vs {oracle}",
            d.pmf(x)
        );
    }
    for &p in &grid9() {
        for &q in &grid9() {
            let d = DiscreteSkewLogistic::new(p, q).unwrap();
            let b = {
                // window with analytic tail mass below 1e-10
                let target = (1e-10f64 / 4.0).ln();
                ((target / p.ln()).max(target / q.ln()).ceil() as i64 + 1).max(2)
            };
            let sum: f64 = (-b..=b).map(|x| d.pmf(x)).sum();
            assert!((sum - 1.0).abs() < 1e-9, "({p},{q}): {sum}");
        }
    }
    println!("PASS criterion 4: pmf equals continuous sf difference; grid normalization holds");
}

#[test]
fn criterion_5_quantile_and_mode_exactness() {
    // Closed-form quantile versus linear-scan inversion, exact integer
    // equality.
    let scan = |d: &DiscreteSkewLogistic, gamma: f64| -> i64 {
        let mut x = -2000;
        while d.cdf(x) < gamma {
            x += 1;
        }
        x
    };
    for &p in &[0.25, 0.5, 0.75] {
        for &q in &[0.25, 0.5, 0.75] {
            let d = DiscreteSkewLogistic::new(p, q).unwrap();
            for i in 1..=99 {
                let gamma = i as f64 / 100.0;
                assert_eq!(
                    d.quantile(gamma).unwrap(),
                    scan(&d, gamma),
                    "({p},{q}) gamma {gamma}"
                );
            }
        }
    }
    // Closed-form mode rule versus argmax scan on the full grid including p = q.
    for &p in &grid9() {
        for &q in &grid9() {
            let d = DiscreteSkewLogistic::new(p, q).unwrap();
            let max = (-100..=100)
                .map(|x| d.pmf(x))
                .fold(f64::NEG_INFINITY, f64::max);
            let argmax: Vec<i64> = (-100..=100).filter(|&x| d.pmf(x) == max).collect();
            assert_eq!(d.mode(), argmax, "({p},{q})");
        }
    }
    println!("PASS criterion 5: quantile matches scan inversion; mode matches argmax");
}

#[test]
fn criterion_6_moment_oracle() {
    let sym = DiscreteSkewLogistic::new(0.37, 0.37).unwrap();
    let m = sym.mean_variance_exact(1e-12).unwrap();
    assert!((m.mean + 0.5).abs() < 1e-9, "symmetric mean {}", m.mean);

    // Million-draw sample moments against the series oracle.
    let d = DiscreteSkewLogistic::new(0.515, 0.719).unwrap();
    let exact = d.mean_variance_exact(1e-11).unwrap();
    let n = 1_000_000usize;
    let s = sample_inversion(&d, &mut SeededStream::new(606), n);
    let se_mean = (exact.variance / n as f64).sqrt();
    assert!(
        (s.mean() - exact.mean).abs() < 5.0 * se_mean,
        "mean {} vs {}",
        s.mean(),
        exact.mean
    );
    // Var(sample variance) ~ var^2 (kurt - 1 + 2/(n-1)) / n; the kurtosis
    // factor for this law is ~5, so 3 is a safe understatement of scale.
    let se_var = exact.variance * (3.0f64 / n as f64).sqrt();
    assert!(
        (s.variance() - exact.variance).abs() < 5.0 * se_var,
        "variance {} vs {}",
        s.variance(),
        exact.variance
    );

    for &p in &grid9() {
        for &q in &grid9() {
            let d = DiscreteSkewLogistic::new(p, q).unwrap();
            let exact = d.mean_variance_exact(1e-10).unwrap();
            let approx = d.mean_variance_approx();
            assert!((exact.mean - approx.mean).abs() <= 0.5, "mean at ({p},{q})");
            assert!(
                (exact.variance - approx.variance).abs() <= 0.5,
                "variance at ({p},{q})"
            );
        }
    }
    println!(
        "PASS criterion 6: exact moments verified symbolically, empirically and vs approximation"
    );
}

#[test]
fn criterion_7_calculus_against_finite_differences() {
    let mut rng = SeededStream::new(7);
    for trial in 0..50u64 {
        let p = 0.1 + 0.8 * rng.next_open01();
        let q = 0.1 + 0.8 * rng.next_open01();
        let d = DiscreteSkewLogistic::new(p, q).unwrap();
        let gen =
            DiscreteSkewLogistic::new(0.2 + 0.6 * rng.next_open01(), 0.2 + 0.6 * rng.next_open01())
                .unwrap();
        let n = 30 + (rng.next_u64() % 170) as usize;
        let s = sample_inversion(&gen, &mut SeededStream::derive(7000, &[trial]), n);

        let ll = |p: f64, q: f64| loglik(&DiscreteSkewLogistic::new(p, q).unwrap(), &s);
        let h = 1e-5;
        let (dp, dq) = score(&d, &s);
        let fd_p = (ll(p + h, q) - ll(p - h, q)) / (2.0 * h);
        let fd_q = (ll(p, q + h) - ll(p, q - h)) / (2.0 * h);
        let tol = |c: f64| (1e-4 * c.abs()).max(1e-6);
        assert!((dp - fd_p).abs() < tol(dp), "score p: {dp} vs {fd_p}");
        assert!((dq - fd_q).abs() < tol(dq), "score q: {dq} vs {fd_q}");

        let info = observed_info(&d, &s);
        let sc = |p: f64, q: f64| score(&DiscreteSkewLogistic::new(p, q).unwrap(), &s);
        let fd_pp = (sc(p + h, q).0 - sc(p - h, q).0) / (2.0 * h);
        let fd_qq = (sc(p, q + h).1 - sc(p, q - h).1) / (2.0 * h);
        let fd_pq = (sc(p, q + h).0 - sc(p, q - h).0) / (2.0 * h);
        let rel = |a: f64, b: f64| (a - b).abs() / b.abs().max(1e-8);
        assert!(rel(-info.i_pp, fd_pp) < 1e-4, "hessian pp");
        assert!(rel(-info.i_qq, fd_qq) < 1e-4, "hessian qq");
        assert!(
            (-info.i_pq - fd_pq).abs() / fd_pq.abs().max(1.0) < 1e-3,
            "hessian pq: {} vs {fd_pq}",
            -info.i_pq
        );
    }
    println!("PASS criterion 7: analytic score and information match finite differences");
}

#[test]
fn criterion_8_sampler_validity() {
    // One-sample goodness of fit at alpha = 0.001.
    let d = DiscreteSkewLogistic::new(0.6, 0.4).unwrap();
    let s = sample_inversion(&d, &mut SeededStream::new(8), 100_000);
    let gof = chi_square_gof(&s, &d, -15, 15);
    assert!(gof.p_value > 0.001, "one-sample GOF failed: {gof:?}");

    // Route equivalence: 20 seeded two-sample runs, at most one rejection
    // at alpha = 0.001.
    let mut failures = 0;
    for run in 0..20u64 {
        let d = DiscreteSkewLogistic::new(0.45, 0.7).unwrap();
        let a = sample_inversion(&d, &mut SeededStream::derive(8080, &[run, 0]), 100_000);
        let b = sample_floor_continuous(&d, &mut SeededStream::derive(8080, &[run, 1]), 100_000);
        if two_sample_chi_square(&a, &b).p_value <= 0.001 {
            failures += 1;
        }
    }
    assert!(
        failures <= 1,
        "{failures} of 20 route-equivalence runs failed"
    );
    println!("PASS criterion 8: samplers pass GOF; routes agree ({failures}/20 rejections)");
}

#[test]
fn criterion_9_method_of_proportion() {
    // Population-level inversion recovers the parameters exactly.
    for &p in &grid9() {
        for &q in &grid9() {
            let d = DiscreteSkewLogistic::new(p, q).unwrap();
            let pi_plus = d.sf(0);
            let pi_minus = d.cdf(-1);
            let pi_zero = d.pmf(0);
            let p_hat = (pi_plus - pi_zero) / (pi_plus + pi_zero);
            let q_hat = p_hat.powf(pi_plus / pi_minus);
            assert!((p_hat - p).abs() < 1e-12 * p.max(1e-3), "p at ({p},{q})");
            assert!((q_hat - q).abs() < 1e-11, "q at ({p},{q}): {q_hat}");
        }
    }
    // Documented failures.
    let no_zeros = IntSample::new(vec![-3, -1, 2, 5]);
    assert!(matches!(
        fit_mop(&no_zeros),
        Err(Error::MopInapplicable(MopFailure::NoZeros))
    ));
    let all_negative = IntSample::new(vec![-4, -3, -1]);
    assert!(matches!(
        fit_mop(&all_negative),
        Err(Error::MopInapplicable(MopFailure::AllNegative))
    ));
    println!("PASS criterion 9: method of proportion inverts exactly and fails as documented");
}

#[test]
fn fox_river_library_level_cross_check() {
    // The same numbers as criterion 1, through the API instead of the CLI,
    // plus the profile-dominance property of the location fit.
    let sample = Dataset::fox_river()
        .to_int_sample(&Transform::shift_then_floor(FOX_RIVER_SHIFT))
        .unwrap();
    let fit = fit_mle(&sample, None, &FitOptions::default()).unwrap();
    assert!(fit.converged);
    assert!((fit.loglik - -92.29).abs() <= 0.05);

    // Published point, rounded: the log-likelihood there is within a whisker
    // of the optimum, and the optimum dominates.
    let reference = DiscreteSkewLogistic::new(0.515, 0.719).unwrap();
    let at_reference = loglik(&reference, &sample);
    assert!((at_reference - -92.29).abs() <= 0.05);
    assert!(fit.loglik >= at_reference - 1e-9);

    let profile = dslogistic::estimation::fit_mu_profile(&sample, &FitOptions::default()).unwrap();
    assert!(profile.loglik >= fit.loglik - 1e-6);
    println!("PASS cross-check: library-level Fox River fit agrees with the CLI path");
}

#[test]
fn simulation_grid_trends_hold_for_every_pair_and_method() {
    // Consistency drift across the whole grid: MSE at n=100 sits below
    // MSE at n=25 for both parameters under both estimators, and also
    // |bias| for the (0.25, 0.25) reference pair's MOP cells.
    let grid = study_grid(200, 2016);
    let reports: Vec<_> = grid.iter().map(run_scenario).collect();
    for &p in &[0.25, 0.5, 0.75] {
        for &q in &[0.25, 0.5, 0.75] {
            let cell = |n: usize| {
                reports
                    .iter()
                    .find(|r| r.p == p && r.q == q && r.n == n)
                    .expect("cell present")
            };
            let (small, large) = (cell(25), cell(100));
            let (ml_s, ml_l) = (small.ml.as_ref().unwrap(), large.ml.as_ref().unwrap());
            assert!(
                ml_l.mse_p.value < ml_s.mse_p.value,
                "ML mse(p) at ({p},{q})"
            );
            assert!(
                ml_l.mse_q.value < ml_s.mse_q.value,
                "ML mse(q) at ({p},{q})"
            );
            let (mp_s, mp_l) = (small.mop.as_ref().unwrap(), large.mop.as_ref().unwrap());
            assert!(
                mp_l.mse_p.value < mp_s.mse_p.value,
                "MP mse(p) at ({p},{q})"
            );
            assert!(
                mp_l.mse_q.value < mp_s.mse_q.value,
                "MP mse(q) at ({p},{q})"
            );
        }
    }
    let mop_cell = |n: usize| {
        reports
            .iter()
            .find(|r| r.p == 0.25 && r.q == 0.25 && r.n == n)
            .and_then(|r| r.mop.as_ref())
            .expect("cell present")
    };
    let (small, large) = (mop_cell(25), mop_cell(100));
    assert!(large.bias_p.value.abs() < small.bias_p.value.abs());
    assert!(large.bias_q.value.abs() < small.bias_q.value.abs());
    println!("PASS cross-check: MSE shrinks with n in every grid cell for both methods");
}

#[test]
fn coverage_band_holds_across_interior_grid() {
    // Wald coverage at n=100, 1000 replicates, for all nine interior
    // pairs. Measured range under this seed: [0.9216, 0.9629], tightest
    // at CP(q) for (0.75, 0.25).
    for &p in &[0.25, 0.5, 0.75] {
        for &q in &[0.25, 0.5, 0.75] {
            let params = DiscreteSkewLogistic::new(p, q).unwrap();
            let report = run_scenario(&Scenario::new(params, 100, 1000, 909));
            let ml = report.ml.expect("converged replicates");
            for (label, cp) in [("p", ml.cp_p), ("q", ml.cp_q)] {
                assert!(
                    (0.92..=0.975).contains(&cp),
                    "coverage for {label} at ({p},{q}): {cp}"
                );
            }
        }
    }
    println!("PASS cross-check: coverage stays in [0.92, 0.975] across the interior grid");
}
