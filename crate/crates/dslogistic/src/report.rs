//! Deterministic text/CSV rendering used by the command-line interface:
//! distribution tables, sample listings and the model-comparison table.
//!
//! Formats are fixed: probabilities carry 6 significant digits, estimates
//! and standard errors 4 decimals.

use crate::dist::DiscreteSkewLogistic;
use crate::error::Result;
use crate::estimation::{FitResult, IntSample};

/// Six significant digits; switches to scientific notation outside
/// [1e-4, 1e6) so tiny tail probabilities stay informative.
pub fn sig6(v: f64) -> String {
    if v == 0.0 {
        return "0.000000".into();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let exp = v.abs().log10().floor() as i32;
    if (-4..6).contains(&exp) {
        let decimals = (5 - exp).max(0) as usize;
        format!("{v:.decimals$}")
    } else {
        format!("{v:.5e}")
    }
}

/// CSV table of pmf/cdf/sf/hazard over an inclusive integer range.
pub fn eval_table(d: &DiscreteSkewLogistic, from: i64, to: i64) -> String {
    let mut out = String::from("x,pmf,cdf,sf,hazard\n");
    for x in from..=to {
        out.push_str(&format!(
            "{x},{},{},{},{}\n",
            sig6(d.pmf(x)),
            sig6(d.cdf(x)),
            sig6(d.sf(x)),
            sig6(d.hazard(x))
        ));
    }
    out
}

/// CSV table of quantiles for the given levels.
pub fn quantile_table(d: &DiscreteSkewLogistic, gammas: &[f64]) -> Result<String> {
    let mut out = String::from("gamma,quantile\n");
    for &g in gammas {
        out.push_str(&format!("{g},{}\n", d.quantile(g)?));
    }
    Ok(out)
}

/// One integer per line.
pub fn sample_lines(s: &IntSample) -> String {
    let mut out = String::new();
    for v in s.values() {
        out.push_str(&format!("{v}\n"));
    }
    out
}

/// CSV with a header row.
pub fn sample_csv(s: &IntSample) -> String {
    let mut out = String::from("x\n");
    out.push_str(&sample_lines(s));
    out
}

fn estimate_cell(fit: &FitResult, name: &str) -> String {
    match fit.param(name) {
        None => "-".into(),
        Some(p) => match p.std_error {
            Some(se) => format!("{:.4}({:.4})", p.value, se),
            None => format!("{:.4}", p.value),
        },
    }
}

/// Model-comparison table: one column per fitted model, one row per
/// parameter (`estimate(se)`, `-` where a model lacks the parameter) and
/// a closing log-likelihood row.
pub fn comparison_table(fits: &[FitResult]) -> String {
    let mut out = String::from("parameter");
    for fit in fits {
        out.push(',');
        out.push_str(fit.model);
    }
    out.push('\n');
    for name in ["mu", "p", "q", "sigma"] {
        if fits.iter().all(|f| f.param(name).is_none()) {
            continue;
        }
        out.push_str(name);
        for fit in fits {
            out.push(',');
            out.push_str(&estimate_cell(fit, name));
        }
        out.push('\n');
    }
    out.push_str("logL");
    for fit in fits {
        out.push_str(&format!(",{:.4}", fit.loglik));
    }
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::estimation::{FitMethod, ParamEstimate};

    #[test]
    fn sig6_formats() {
        assert_eq!(sig6(1.0 / 6.0), "0.166667");
        assert_eq!(sig6(0.5), "0.500000");
        assert_eq!(sig6(1.0), "1.00000");
        assert_eq!(sig6(0.0), "0.000000");
        assert_eq!(sig6(123.456789), "123.457");
        assert_eq!(sig6(3.0e-9), "3.00000e-9");
    }

    #[test]
    fn eval_table_shape_and_values() {
        let d = DiscreteSkewLogistic::new(0.5, 0.5).unwrap();
        let t = eval_table(&d, -5, 5);
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines.len(), 12);
        assert_eq!(lines[0], "x,pmf,cdf,sf,hazard");
        let zero_row: Vec<&str> = lines[6].split(',').collect();
        assert_eq!(zero_row[0], "0");
        assert_eq!(zero_row[1], "0.166667");
    }

    #[test]
    fn quantile_table_values() {
        let d = DiscreteSkewLogistic::new(0.5, 0.5).unwrap();
        let t = quantile_table(&d, &[0.5, 0.999]).unwrap();
        assert!(t.starts_with("gamma,quantile\n"));
        assert!(t.contains("0.5,-1\n"));
        assert!(d.quantile(0.0001).is_ok());
        assert!(quantile_table(&d, &[1.5]).is_err());
    }

    #[test]
    fn comparison_table_layout() {
        let a = FitResult {
            model: "dslogistic",
            method: FitMethod::Mle,
            params: vec![
                ParamEstimate::point("mu", 11.5),
                ParamEstimate {
                    name: "p",
                    value: 0.51481,
                    std_error: Some(0.0729),
                    ci: None,
                },
                ParamEstimate {
                    name: "q",
                    value: 0.71889,
                    std_error: Some(0.0381),
                    ci: None,
                },
            ],
            loglik: -92.2905,
            converged: true,
            boundary: false,
            iterations: 20,
        };
        let b = FitResult {
            model: "dnorm",
            method: FitMethod::Mle,
            params: vec![
                ParamEstimate {
                    name: "mu",
                    value: 9.318,
                    std_error: Some(0.717),
                    ci: None,
                },
                ParamEstimate {
                    name: "sigma",
                    value: 4.11,
                    std_error: Some(0.507),
                    ci: None,
                },
            ],
            loglik: -93.57,
            converged: true,
            boundary: false,
            iterations: 25,
        };
        let table = comparison_table(&[a, b]);
        let lines: Vec<&str> = table.lines().collect();
        assert_eq!(lines[0], "parameter,dslogistic,dnorm");
        assert!(lines[1].starts_with("mu,11.5000,9.3180(0.7170)"));
        assert!(lines[2].starts_with("p,0.5148(0.0729),-"));
        assert!(lines[3].starts_with("q,0.7189(0.0381),-"));
        assert!(lines[4].starts_with("sigma,-,4.1100(0.5070)"));
        assert!(lines[5].starts_with("logL,-92.2905,-93.5700"));
    }
}
