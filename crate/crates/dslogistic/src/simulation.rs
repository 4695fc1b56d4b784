//! Monte Carlo study runner: for each `(p, q, n)` scenario it repeatedly
//! samples, fits by maximum likelihood and by the method of proportion,
//! and aggregates bias, MSE, average confidence-interval width and
//! coverage probability.
//!
//! Replicate `r` of a scenario draws from the stream
//! `SeededStream::derive(master_seed, &[r])`, so reports are reproducible
//! bit for bit and replicates never share a stream.

use crate::dist::DiscreteSkewLogistic;
use crate::error::{Error, Result};
use crate::estimation::{fit_mle, fit_mop, FitOptions};
use crate::math::z_for_level;
use crate::rng::{derive_seed, SeededStream};
use crate::sampling::sample_inversion;

/// Which z multiplier the coverage and width cells use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZRule {
    /// The literal 1.96 of the study definition, regardless of level.
    Literal196,
    /// The exact normal quantile for the scenario's `ci_level`.
    ExactForLevel,
}

impl ZRule {
    fn z(&self, level: f64) -> f64 {
        match self {
            ZRule::Literal196 => 1.96,
            ZRule::ExactForLevel => z_for_level(level),
        }
    }
}

/// One simulation cell: true parameters, sample size, replication budget.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scenario {
    pub params: DiscreteSkewLogistic,
    pub n: usize,
    pub replicates: usize,
    pub master_seed: u64,
    pub ci_level: f64,
    pub z_rule: ZRule,
}

impl Scenario {
    pub fn new(
        params: DiscreteSkewLogistic,
        n: usize,
        replicates: usize,
        master_seed: u64,
    ) -> Self {
        Scenario {
            params,
            n,
            replicates,
            master_seed,
            ci_level: 0.95,
            z_rule: ZRule::Literal196,
        }
    }
}

/// Mean and Monte Carlo standard error of one aggregated cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CellStat {
    pub value: f64,
    /// Standard error of `value` across replicates.
    pub mc_se: f64,
}

fn cell(values: &[f64]) -> CellStat {
    let m = values.len() as f64;
    let mean = values.iter().sum::<f64>() / m;
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (m - 1.0).max(1.0);
    CellStat {
        value: mean,
        mc_se: (var / m).sqrt(),
    }
}

/// Maximum-likelihood cells of one scenario.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MlSummary {
    pub bias_p: CellStat,
    pub bias_q: CellStat,
    pub mse_p: CellStat,
    pub mse_q: CellStat,
    pub aw_p: CellStat,
    pub aw_q: CellStat,
    pub cp_p: f64,
    pub cp_q: f64,
    /// Replicates entering bias/MSE cells.
    pub used: usize,
    /// Replicates entering width/coverage cells.
    pub used_ci: usize,
}

/// Method-of-proportion cells (no standard errors are defined, so only
/// bias and MSE are reported).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MopSummary {
    pub bias_p: CellStat,
    pub bias_q: CellStat,
    pub mse_p: CellStat,
    pub mse_q: CellStat,
    pub used: usize,
}

/// Aggregated outcome of one scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct SimReport {
    pub p: f64,
    pub q: f64,
    pub n: usize,
    pub replicates: usize,
    pub ml: Option<MlSummary>,
    pub mop: Option<MopSummary>,
    /// MLE replicates dropped for non-convergence (includes boundary hits).
    pub ml_nonconverged: usize,
    /// Converged MLE replicates without standard errors (kept in bias/MSE,
    /// dropped from width/coverage).
    pub ml_missing_se: usize,
    /// Replicates where the method of proportion was inapplicable.
    pub mop_failures: usize,
}

/// Run one scenario to completion. Per-replicate failures are counted,
/// never fatal, and excluded from the averaged cells.
pub fn run_scenario(sc: &Scenario) -> SimReport {
    let (p0, q0) = (sc.params.p(), sc.params.q());
    let z = sc.z_rule.z(sc.ci_level);
    let opts = FitOptions {
        mu: sc.params.mu(),
        ci_level: sc.ci_level,
        ..FitOptions::default()
    };

    let mut ml_p = Vec::with_capacity(sc.replicates);
    let mut ml_q = Vec::with_capacity(sc.replicates);
    let mut width_p = Vec::new();
    let mut width_q = Vec::new();
    let mut cover_p = 0usize;
    let mut cover_q = 0usize;
    let mut mop_p = Vec::new();
    let mut mop_q = Vec::new();
    let mut ml_nonconverged = 0;
    let mut ml_missing_se = 0;
    let mut mop_failures = 0;

    for r in 0..sc.replicates {
        let mut stream = SeededStream::derive(sc.master_seed, &[r as u64]);
        let sample = sample_inversion(&sc.params, &mut stream, sc.n);

        match fit_mop(&sample) {
            Ok(fit) => {
                mop_p.push(fit.param("p").expect("present").value);
                mop_q.push(fit.param("q").expect("present").value);
            }
            Err(_) => mop_failures += 1,
        }

        let fit = fit_mle(&sample, None, &opts).expect("nonempty sample");
        if !fit.converged {
            ml_nonconverged += 1;
            continue;
        }
        let p_hat = fit.param("p").expect("present");
        let q_hat = fit.param("q").expect("present");
        ml_p.push(p_hat.value);
        ml_q.push(q_hat.value);
        match (p_hat.std_error, q_hat.std_error) {
            (Some(se_p), Some(se_q)) => {
                width_p.push(2.0 * z * se_p);
                width_q.push(2.0 * z * se_q);
                if (p_hat.value - z * se_p..p_hat.value + z * se_p).contains(&p0) {
                    cover_p += 1;
                }
                if (q_hat.value - z * se_q..q_hat.value + z * se_q).contains(&q0) {
                    cover_q += 1;
                }
            }
            _ => ml_missing_se += 1,
        }
    }

    let ml = (!ml_p.is_empty()).then(|| {
        let dev = |v: &[f64], t: f64| -> Vec<f64> { v.iter().map(|x| x - t).collect() };
        let sq = |v: &[f64], t: f64| -> Vec<f64> { v.iter().map(|x| (x - t) * (x - t)).collect() };
        MlSummary {
            bias_p: cell(&dev(&ml_p, p0)),
            bias_q: cell(&dev(&ml_q, q0)),
            mse_p: cell(&sq(&ml_p, p0)),
            mse_q: cell(&sq(&ml_q, q0)),
            aw_p: cell(&width_p),
            aw_q: cell(&width_q),
            cp_p: cover_p as f64 / width_p.len().max(1) as f64,
            cp_q: cover_q as f64 / width_q.len().max(1) as f64,
            used: ml_p.len(),
            used_ci: width_p.len(),
        }
    });
    let mop = (!mop_p.is_empty()).then(|| MopSummary {
        bias_p: cell(&mop_p.iter().map(|x| x - p0).collect::<Vec<_>>()),
        bias_q: cell(&mop_q.iter().map(|x| x - q0).collect::<Vec<_>>()),
        mse_p: cell(
            &mop_p
                .iter()
                .map(|x| (x - p0) * (x - p0))
                .collect::<Vec<_>>(),
        ),
        mse_q: cell(
            &mop_q
                .iter()
                .map(|x| (x - q0) * (x - q0))
                .collect::<Vec<_>>(),
        ),
        used: mop_p.len(),
    });

    SimReport {
        p: p0,
        q: q0,
        n: sc.n,
        replicates: sc.replicates,
        ml,
        mop,
        ml_nonconverged,
        ml_missing_se,
        mop_failures,
    }
}

/// Run every scenario of a grid in order.
pub fn run_grid(scenarios: &[Scenario]) -> Vec<SimReport> {
    scenarios.iter().map(run_scenario).collect()
}

/// The full study grid: `p, q in {0.25, 0.5, 0.75}`, `n in {25, 50, 75,
/// 100}`. Scenario seeds are split from `master_seed` by scenario index.
pub fn study_grid(replicates: usize, master_seed: u64) -> Vec<Scenario> {
    let levels = [0.25, 0.5, 0.75];
    let sizes = [25, 50, 75, 100];
    let mut scenarios = Vec::with_capacity(36);
    let mut index = 0u64;
    for &p in &levels {
        for &q in &levels {
            for &n in &sizes {
                let params = DiscreteSkewLogistic::new(p, q).expect("grid params valid");
                scenarios.push(Scenario::new(
                    params,
                    n,
                    replicates,
                    derive_seed(master_seed, &[index]),
                ));
                index += 1;
            }
        }
    }
    scenarios
}

/// Column header matching the study tables: maximum-likelihood cells
/// first, then the method-of-proportion bias/MSE, then failure counters.
pub fn csv_header() -> &'static str {
    "p,q,n,replicates,bias(p),bias(q),mse(p),mse(q),aw(p),aw(q),CL(p),CL(q),\
     mp_bias(p),mp_bias(q),mp_mse(p),mp_mse(q),ml_nonconverged,ml_missing_se,mop_failures"
}

impl SimReport {
    /// One CSV row per scenario; cells without a defined value (e.g. MOP
    /// columns when every replicate failed) are left empty.
    pub fn csv_row(&self) -> String {
        let f = |v: f64| format!("{v:.4}");
        let ml = self.ml.as_ref();
        let mop = self.mop.as_ref();
        let ml_cells = match ml {
            Some(m) => vec![
                f(m.bias_p.value),
                f(m.bias_q.value),
                f(m.mse_p.value),
                f(m.mse_q.value),
                f(m.aw_p.value),
                f(m.aw_q.value),
                f(m.cp_p),
                f(m.cp_q),
            ],
            None => vec![String::new(); 8],
        };
        let mop_cells = match mop {
            Some(m) => vec![
                f(m.bias_p.value),
                f(m.bias_q.value),
                f(m.mse_p.value),
                f(m.mse_q.value),
            ],
            None => vec![String::new(); 4],
        };
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.p,
            self.q,
            self.n,
            self.replicates,
            ml_cells.join(","),
            mop_cells.join(","),
            self.ml_nonconverged,
            self.ml_missing_se,
            self.mop_failures
        )
    }
}

/// A simulation grid parsed from `key=value` text.
#[derive(Debug, Clone, PartialEq)]
pub struct GridConfig {
    pub p_values: Vec<f64>,
    pub q_values: Vec<f64>,
    pub n_values: Vec<usize>,
    pub replicates: usize,
    pub master_seed: u64,
    pub ci_level: f64,
    pub z_rule: ZRule,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig {
            p_values: vec![0.25, 0.5, 0.75],
            q_values: vec![0.25, 0.5, 0.75],
            n_values: vec![25, 50, 75, 100],
            replicates: 200,
            master_seed: 2016,
            ci_level: 0.95,
            z_rule: ZRule::Literal196,
        }
    }
}

impl GridConfig {
    /// Parse `key=value` lines; `#` starts a comment. Unknown keys error.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = GridConfig::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: idx + 1,
                message,
            };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| err(format!("expected key=value, got '{line}'")))?;
            let (key, value) = (key.trim(), value.trim());
            let parse_f64_list = |v: &str| -> Result<Vec<f64>> {
                v.split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<f64>()
                            .map_err(|_| err(format!("bad number '{t}'")))
                    })
                    .collect()
            };
            match key {
                "p" => cfg.p_values = parse_f64_list(value)?,
                "q" => cfg.q_values = parse_f64_list(value)?,
                "n" => {
                    cfg.n_values = value
                        .split(',')
                        .map(|t| {
                            t.trim()
                                .parse::<usize>()
                                .map_err(|_| err(format!("bad count '{t}'")))
                        })
                        .collect::<Result<Vec<usize>>>()?
                }
                "replicates" => {
                    cfg.replicates = value
                        .parse()
                        .map_err(|_| err(format!("bad count '{value}'")))?
                }
                "seed" => {
                    cfg.master_seed = value
                        .parse()
                        .map_err(|_| err(format!("bad seed '{value}'")))?
                }
                "ci_level" => {
                    cfg.ci_level = value
                        .parse()
                        .map_err(|_| err(format!("bad level '{value}'")))?
                }
                "z" => {
                    cfg.z_rule = match value {
                        "literal" => ZRule::Literal196,
                        "exact" => ZRule::ExactForLevel,
                        other => return Err(err(format!("bad z rule '{other}'"))),
                    }
                }
                other => return Err(err(format!("unknown key '{other}'"))),
            }
        }
        Ok(cfg)
    }

    /// Expand into scenarios, splitting per-scenario seeds from the master.
    pub fn to_scenarios(&self) -> Result<Vec<Scenario>> {
        if self.replicates == 0 {
            return Err(Error::InvalidArgument("replicates must be >= 1".into()));
        }
        let mut scenarios = Vec::new();
        let mut index = 0u64;
        for &p in &self.p_values {
            for &q in &self.q_values {
                for &n in &self.n_values {
                    if n == 0 {
                        return Err(Error::InvalidArgument("n must be >= 1".into()));
                    }
                    let params = DiscreteSkewLogistic::new(p, q)?;
                    scenarios.push(Scenario {
                        params,
                        n,
                        replicates: self.replicates,
                        master_seed: derive_seed(self.master_seed, &[index]),
                        ci_level: self.ci_level,
                        z_rule: self.z_rule,
                    });
                    index += 1;
                }
            }
        }
        Ok(scenarios)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_scenario() -> Scenario {
        let params = DiscreteSkewLogistic::new(0.5, 0.5).unwrap();
        Scenario::new(params, 50, 100, 9090)
    }

    #[test]
    fn scenario_is_deterministic() {
        let sc = small_scenario();
        let a = run_scenario(&sc);
        let b = run_scenario(&sc);
        assert_eq!(a, b);
        assert_eq!(a.csv_row(), b.csv_row());
    }

    #[test]
    fn scenario_cells_are_sane() {
        let report = run_scenario(&small_scenario());
        let ml = report.ml.expect("some replicates converge");
        assert!(ml.bias_p.value.abs() < 0.1);
        assert!(ml.mse_p.value > 0.0 && ml.mse_p.value < 0.05);
        assert!(ml.aw_p.value > 0.0 && ml.aw_p.value < 1.0);
        assert!(ml.cp_p > 0.8 && ml.cp_p <= 1.0);
        assert!(ml.used + report.ml_nonconverged == report.replicates);
        let mop = report.mop.expect("some replicates admit MOP");
        assert!(mop.used + report.mop_failures == report.replicates);
    }

    #[test]
    fn mse_equals_bias_squared_plus_variance() {
        // Internal aggregation identity on the raw estimate stream.
        let sc = small_scenario();
        let report = run_scenario(&sc);
        let ml = report.ml.unwrap();
        // Reconstruct variance from the MC standard error of the bias:
        // se_bias^2 * m = var(estimates).
        let m = ml.used as f64;
        let var = ml.bias_p.mc_se * ml.bias_p.mc_se * m;
        let lhs = ml.mse_p.value;
        let rhs = ml.bias_p.value.powi(2) + var * (m - 1.0) / m;
        assert!((lhs - rhs).abs() < 1e-12 * lhs.max(1.0), "{lhs} vs {rhs}");
    }

    #[test]
    fn single_degenerate_replicate_is_counted_not_fatal() {
        // n = 1: the only value sits on one side, so the MLE is boundary
        // flagged and MOP is inapplicable; the report shows counts and
        // empty averages.
        let params = DiscreteSkewLogistic::new(0.5, 0.5).unwrap();
        let sc = Scenario::new(params, 1, 1, 4);
        let report = run_scenario(&sc);
        assert_eq!(report.ml_nonconverged, 1);
        assert_eq!(report.mop_failures, 1);
        assert!(report.ml.is_none());
        assert!(report.mop.is_none());
        let row = report.csv_row();
        assert!(row.contains(",,"), "empty cells expected: {row}");
    }

    #[test]
    fn study_grid_shape_and_seed_split() {
        let grid = study_grid(10, 7);
        assert_eq!(grid.len(), 36);
        let seeds: std::collections::HashSet<u64> = grid.iter().map(|s| s.master_seed).collect();
        assert_eq!(seeds.len(), 36);
        let reports = run_grid(&grid[..2]);
        assert_eq!(reports.len(), 2);
        let header_cols = csv_header().split(',').count();
        for r in &reports {
            assert_eq!(r.csv_row().split(',').count(), header_cols);
        }
    }

    #[test]
    fn grid_config_roundtrip_and_errors() {
        let cfg = GridConfig::parse(
            "# study\np = 0.25, 0.75\nq=0.5\nn = 25, 100\nreplicates = 7\nseed = 99\nz = exact\n",
        )
        .unwrap();
        assert_eq!(cfg.p_values, vec![0.25, 0.75]);
        assert_eq!(cfg.q_values, vec![0.5]);
        assert_eq!(cfg.n_values, vec![25, 100]);
        assert_eq!(cfg.replicates, 7);
        assert_eq!(cfg.master_seed, 99);
        assert_eq!(cfg.z_rule, ZRule::ExactForLevel);
        assert_eq!(cfg.to_scenarios().unwrap().len(), 4);

        assert!(GridConfig::parse("nonsense\n").is_err());
        assert!(GridConfig::parse("mystery = 3\n").is_err());
        assert!(GridConfig::parse("p = a,b\n").is_err());
        let zero = GridConfig::parse("replicates = 0\n").unwrap();
        assert!(zero.to_scenarios().is_err());
    }

    #[test]
    fn coverage_uses_literal_or_exact_z() {
        let params = DiscreteSkewLogistic::new(0.5, 0.5).unwrap();
        let mut sc = Scenario::new(params, 80, 60, 31337);
        sc.z_rule = ZRule::Literal196;
        let lit = run_scenario(&sc);
        sc.z_rule = ZRule::ExactForLevel;
        let exact = run_scenario(&sc);
        // 1.96 vs 1.95996...: widths differ by the z ratio.
        let a = lit.ml.unwrap().aw_p.value;
        let b = exact.ml.unwrap().aw_p.value;
        assert!((a / b - 1.96 / 1.959963984540054).abs() < 1e-12);
    }
}
