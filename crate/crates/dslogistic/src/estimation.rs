//! Parameter estimation for the discrete skew logistic distribution:
//! method of proportion, maximum likelihood in logit-transformed
//! coordinates with the analytic score, observed/expected information and
//! Wald confidence intervals, and an integer-location profile fit.

use crate::dist::{ln_delta, DiscreteSkewLogistic};
use crate::error::{Error, MopFailure, Result};
use crate::math::{logit, pow01, sigmoid, z_for_level};
use crate::optim::{self, OptimOptions};

/// An ordered sample of integers with cached branch counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSample {
    values: Vec<i64>,
    s_minus: usize,
    s_plus: usize,
    zeros: usize,
}

impl IntSample {
    pub fn new(values: Vec<i64>) -> Self {
        let s_minus = values.iter().filter(|&&x| x < 0).count();
        let zeros = values.iter().filter(|&&x| x == 0).count();
        let s_plus = values.len() - s_minus;
        IntSample {
            values,
            s_minus,
            s_plus,
            zeros,
        }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Count of values `< 0`.
    pub fn s_minus(&self) -> usize {
        self.s_minus
    }

    /// Count of values `>= 0`.
    pub fn s_plus(&self) -> usize {
        self.s_plus
    }

    /// Count of values `== 0`.
    pub fn zeros(&self) -> usize {
        self.zeros
    }

    pub fn mean(&self) -> f64 {
        if self.values.is_empty() {
            return f64::NAN;
        }
        self.values.iter().map(|&x| x as f64).sum::<f64>() / self.values.len() as f64
    }

    /// Unbiased sample variance.
    pub fn variance(&self) -> f64 {
        let n = self.values.len();
        if n < 2 {
            return f64::NAN;
        }
        let m = self.mean();
        self.values
            .iter()
            .map(|&x| (x as f64 - m).powi(2))
            .sum::<f64>()
            / (n as f64 - 1.0)
    }

    /// Branch counts after shifting by `mu`: `(s_minus, s_plus, zeros)`.
    fn counts_shifted(&self, mu: i64) -> (usize, usize, usize) {
        if mu == 0 {
            return (self.s_minus, self.s_plus, self.zeros);
        }
        let s_minus = self.values.iter().filter(|&&x| x - mu < 0).count();
        let zeros = self.values.iter().filter(|&&x| x == mu).count();
        (s_minus, self.values.len() - s_minus, zeros)
    }
}

/// Log-likelihood of the sample, in the grouped form
/// `s- ln(2 ln p / ln pq) + s+ ln(2 ln q / ln pq) + branch sums`,
/// which equals the sum of [`DiscreteSkewLogistic::ln_pmf`] values.
///
/// Returns `-inf` rather than erroring when a pmf value underflows: the
/// optimizer treats that as an excluded region.
pub fn loglik(d: &DiscreteSkewLogistic, s: &IntSample) -> f64 {
    loglik_raw(d.p(), d.q(), d.mu(), s)
}

pub(crate) fn loglik_raw(p: f64, q: f64, mu: i64, s: &IntSample) -> f64 {
    if !(p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0) {
        return f64::NEG_INFINITY;
    }
    let lp = p.ln();
    let lq = q.ln();
    let lpq = lp + lq;
    let mut s_minus = 0usize;
    let mut sum = 0.0;
    for &x in s.values() {
        let y = x - mu;
        if y >= 0 {
            sum += ln_delta(p, y);
        } else {
            s_minus += 1;
            sum += ln_delta(q, -y - 1);
        }
    }
    let s_plus = s.len() - s_minus;
    s_minus as f64 * (2.0 * lp / lpq).ln() + s_plus as f64 * (2.0 * lq / lpq).ln() + sum
}

/// `d/dt ln delta(t, k)` for `k >= 0`.
#[inline]
fn ln_delta_dt(t: f64, k: i64) -> f64 {
    let kf = k as f64;
    let tk = pow01(t, k);
    kf / (t * (1.0 + tk)) - 1.0 / (1.0 - t) - (kf + 1.0) * tk / (1.0 + tk * t)
}

/// `d^2/dt^2 ln delta(t, k)` for `k >= 0`.
#[inline]
fn ln_delta_dtt(t: f64, k: i64) -> f64 {
    let kf = k as f64;
    let tk = pow01(t, k);
    let tk1 = tk * t;
    let s1 = tk / (1.0 + tk);
    let s2 = tk1 / (1.0 + tk1);
    -kf / (t * t) - 1.0 / ((1.0 - t) * (1.0 - t))
        + (-kf * (kf - 1.0) * s1 + kf * kf * s1 * s1 - kf * (kf + 1.0) * s2
            + (kf + 1.0) * (kf + 1.0) * s2 * s2)
            / (t * t)
}

/// Analytic gradient of the log-likelihood, `(dl/dp, dl/dq)`.
pub fn score(d: &DiscreteSkewLogistic, s: &IntSample) -> (f64, f64) {
    score_raw(d.p(), d.q(), d.mu(), s)
}

pub(crate) fn score_raw(p: f64, q: f64, mu: i64, s: &IntSample) -> (f64, f64) {
    let lp = p.ln();
    let lq = q.ln();
    let lpq = lp + lq;
    let n = s.len() as f64;
    let mut s_minus = 0.0;
    let mut dp = 0.0;
    let mut dq = 0.0;
    for &x in s.values() {
        let y = x - mu;
        if y >= 0 {
            dp += ln_delta_dt(p, y);
        } else {
            s_minus += 1.0;
            dq += ln_delta_dt(q, -y - 1);
        }
    }
    let s_plus = n - s_minus;
    dp += s_minus / (p * lp) - n / (p * lpq);
    dq += s_plus / (q * lq) - n / (q * lpq);
    (dp, dq)
}

/// Observed information: the negated Hessian of the log-likelihood.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InfoMatrix {
    pub i_pp: f64,
    pub i_pq: f64,
    pub i_qq: f64,
}

impl InfoMatrix {
    pub fn det(&self) -> f64 {
        self.i_pp * self.i_qq - self.i_pq * self.i_pq
    }

    /// Positive definite iff both leading minors are positive.
    pub fn is_positive_definite(&self) -> bool {
        self.i_pp > 0.0 && self.det() > 0.0
    }

    /// `(se_p, se_q)`: square roots of the diagonal of the inverse, or
    /// `None` when the matrix is not positive definite.
    pub fn standard_errors(&self) -> Option<(f64, f64)> {
        optim::se_from_info_2x2(self.i_pp, self.i_pq, self.i_qq)
    }
}

/// Observed information at `(p, q)` from the analytic second derivatives
/// of the grouped log-likelihood.
pub fn observed_info(d: &DiscreteSkewLogistic, s: &IntSample) -> InfoMatrix {
    let (p, q, mu) = (d.p(), d.q(), d.mu());
    let lp = p.ln();
    let lq = q.ln();
    let lpq = lp + lq;
    let n = s.len() as f64;
    let mut s_minus = 0.0;
    let mut lpp = 0.0;
    let mut lqq = 0.0;
    for &x in s.values() {
        let y = x - mu;
        if y >= 0 {
            lpp += ln_delta_dtt(p, y);
        } else {
            s_minus += 1.0;
            lqq += ln_delta_dtt(q, -y - 1);
        }
    }
    let s_plus = n - s_minus;
    lpp += n * (1.0 / (p * p * lpq) + 1.0 / (p * p * lpq * lpq))
        - s_minus * (1.0 / (p * p * lp) + 1.0 / (p * p * lp * lp));
    lqq += n * (1.0 / (q * q * lpq) + 1.0 / (q * q * lpq * lpq))
        - s_plus * (1.0 / (q * q * lq) + 1.0 / (q * q * lq * lq));
    let cross = n / (p * q * lpq * lpq);
    InfoMatrix {
        i_pp: -lpp,
        i_pq: -cross,
        i_qq: -lqq,
    }
}

/// Expected (Fisher) information for a sample of size `n`, by summing the
/// per-observation Hessian against the pmf over a support window whose
/// truncated mass is below `tol`. The branch indicators integrate to the
/// branch masses `P(X >= mu) = ln q / ln pq` and `P(X < mu) = ln p / ln pq`.
pub fn expected_info(d: &DiscreteSkewLogistic, n: usize, tol: f64) -> Result<InfoMatrix> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be > 0, got {tol}"
        )));
    }
    let (p, q) = (d.p(), d.q());
    let lp = p.ln();
    let lq = q.ln();
    let lpq = lp + lq;

    // Per-observation group-term second derivatives.
    let npp = 1.0 / (p * p * lpq) + 1.0 / (p * p * lpq * lpq);
    let nqq = 1.0 / (q * q * lpq) + 1.0 / (q * q * lpq * lpq);
    let spp = 1.0 / (p * p * lp) + 1.0 / (p * p * lp * lp);
    let sqq = 1.0 / (q * q * lq) + 1.0 / (q * q * lq * lq);

    // The polynomial growth of the branch Hessian is swamped by the
    // geometric pmf decay; shrinking the mass tolerance covers it.
    let b = d.support_half_width(tol * 1e-6);
    let mut e_pp = 0.0;
    let mut e_qq = 0.0;
    for y in -b..=b {
        let f = d.pmf(y + d.mu());
        if y >= 0 {
            e_pp += f * (npp + ln_delta_dtt(p, y));
            e_qq += f * (nqq - sqq);
        } else {
            e_pp += f * (npp - spp);
            e_qq += f * (nqq + ln_delta_dtt(q, -y - 1));
        }
    }
    let e_pq = 1.0 / (p * q * lpq * lpq);
    let nf = n as f64;
    Ok(InfoMatrix {
        i_pp: -nf * e_pp,
        i_pq: -nf * e_pq,
        i_qq: -nf * e_qq,
    })
}

/// Which estimator produced a [`FitResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FitMethod {
    Mop,
    Mle,
}

impl FitMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            FitMethod::Mop => "mop",
            FitMethod::Mle => "mle",
        }
    }
}

/// One fitted parameter with optional Wald uncertainty.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamEstimate {
    pub name: &'static str,
    pub value: f64,
    pub std_error: Option<f64>,
    pub ci: Option<(f64, f64)>,
}

impl ParamEstimate {
    /// An estimate without uncertainty information.
    pub fn point(name: &'static str, value: f64) -> Self {
        ParamEstimate {
            name,
            value,
            std_error: None,
            ci: None,
        }
    }
}

/// Point estimates, uncertainty and diagnostics for one model/sample pair.
#[derive(Debug, Clone, PartialEq)]
pub struct FitResult {
    pub model: &'static str,
    pub method: FitMethod,
    pub params: Vec<ParamEstimate>,
    pub loglik: f64,
    pub converged: bool,
    /// Set when the maximum sits on (or runs to) the parameter boundary,
    /// e.g. for samples without any negative or any nonnegative value.
    pub boundary: bool,
    pub iterations: usize,
}

impl FitResult {
    pub fn param(&self, name: &str) -> Option<&ParamEstimate> {
        self.params.iter().find(|p| p.name == name)
    }

    /// Flat `key=value` record, one line per field.
    pub fn to_key_value(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("model={}\n", self.model));
        out.push_str(&format!("method={}\n", self.method.as_str()));
        for p in &self.params {
            out.push_str(&format!("{}={:.6}\n", p.name, p.value));
            if let Some(se) = p.std_error {
                out.push_str(&format!("se_{}={:.6}\n", p.name, se));
            }
            if let Some((lo, hi)) = p.ci {
                out.push_str(&format!("ci_{}={:.6},{:.6}\n", p.name, lo, hi));
            }
        }
        out.push_str(&format!("loglik={:.6}\n", self.loglik));
        out.push_str(&format!("converged={}\n", self.converged));
        out.push_str(&format!("boundary={}\n", self.boundary));
        out.push_str(&format!("iterations={}\n", self.iterations));
        out
    }

    pub fn csv_header() -> &'static str {
        "model,method,parameter,estimate,std_error,ci_low,ci_high,loglik,converged,iterations"
    }

    /// One CSV row per parameter.
    pub fn csv_rows(&self) -> Vec<String> {
        self.params
            .iter()
            .map(|p| {
                let se = p.std_error.map_or(String::new(), |v| format!("{v:.6}"));
                let (lo, hi) = p.ci.map_or((String::new(), String::new()), |(a, b)| {
                    (format!("{a:.6}"), format!("{b:.6}"))
                });
                format!(
                    "{},{},{},{:.6},{},{},{},{:.6},{},{}",
                    self.model,
                    self.method.as_str(),
                    p.name,
                    p.value,
                    se,
                    lo,
                    hi,
                    self.loglik,
                    self.converged,
                    self.iterations
                )
            })
            .collect()
    }
}

/// Where maximum-likelihood standard errors come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeSource {
    Observed,
    Expected,
}

/// Controls for [`fit_mle`] and [`fit_mu_profile`].
#[derive(Debug, Clone, Copy)]
pub struct FitOptions {
    /// Fixed integer location applied before fitting `(p, q)`.
    pub mu: i64,
    /// Confidence level for Wald intervals.
    pub ci_level: f64,
    pub max_iter: usize,
    pub grad_tol: f64,
    pub se_source: SeSource,
}

impl Default for FitOptions {
    fn default() -> Self {
        FitOptions {
            mu: 0,
            ci_level: 0.95,
            max_iter: 300,
            grad_tol: 1e-8,
            se_source: SeSource::Observed,
        }
    }
}

/// Method-of-proportion estimates from branch counts, when defined.
fn mop_point(s_minus: usize, s_plus: usize, zeros: usize) -> Option<(f64, f64)> {
    if zeros == 0 || s_minus == 0 || s_plus == zeros {
        return None;
    }
    let p = (s_plus - zeros) as f64 / (s_plus + zeros) as f64;
    let q = p.powf(s_plus as f64 / s_minus as f64);
    Some((p, q))
}

/// Method of proportion: `p = (r+ - r0)/(r+ + r0)`, `q = p^{r+/r-}`,
/// where `r0`, `r-`, `r+` are the proportions of zero, negative and
/// nonnegative observations.
///
/// Fails on samples where those proportions do not pin both parameters
/// down (no zeros, all negative, no negatives, or nothing positive); the
/// error names the offending count. No standard errors are defined.
pub fn fit_mop(s: &IntSample) -> Result<FitResult> {
    if s.is_empty() {
        return Err(Error::InvalidArgument("empty sample".into()));
    }
    let (s_minus, s_plus, zeros) = (s.s_minus(), s.s_plus(), s.zeros());
    if zeros == 0 {
        return Err(Error::MopInapplicable(if s_plus == 0 {
            MopFailure::AllNegative
        } else {
            MopFailure::NoZeros
        }));
    }
    if s_minus == 0 {
        return Err(Error::MopInapplicable(MopFailure::NoNegatives));
    }
    if s_plus == zeros {
        return Err(Error::MopInapplicable(MopFailure::NoPositives));
    }
    let (p, q) = mop_point(s_minus, s_plus, zeros).expect("checked above");
    Ok(FitResult {
        model: "dslogistic",
        method: FitMethod::Mop,
        params: vec![ParamEstimate::point("p", p), ParamEstimate::point("q", q)],
        loglik: loglik_raw(p, q, 0, s),
        converged: true,
        boundary: false,
        iterations: 0,
    })
}

/// Maximum likelihood for `(p, q)` with the location fixed at `opts.mu`.
///
/// The search runs in logit coordinates with the analytic score mapped by
/// the chain rule, so the box constraint disappears; the starting point is
/// `init`, else the method-of-proportion estimate when defined, else
/// `(0.5, 0.5)`. Samples whose values are all on one side of `mu` have no
/// interior maximum and come back boundary-flagged.
pub fn fit_mle(s: &IntSample, init: Option<(f64, f64)>, opts: &FitOptions) -> Result<FitResult> {
    if s.is_empty() {
        return Err(Error::InvalidArgument("empty sample".into()));
    }
    let (s_minus, s_plus, zeros) = s.counts_shifted(opts.mu);
    let one_sided = s_minus == 0 || s_plus == 0;

    let (p0, q0) = init
        .or_else(|| mop_point(s_minus, s_plus, zeros))
        .unwrap_or((0.5, 0.5));
    let clamp = |v: f64| v.clamp(0.02, 0.98);
    let theta0 = [logit(clamp(p0)), logit(clamp(q0))];

    let eval = |theta: &[f64]| {
        let p = sigmoid(theta[0]);
        let q = sigmoid(theta[1]);
        let value = loglik_raw(p, q, opts.mu, s);
        if !value.is_finite() {
            return (f64::NEG_INFINITY, vec![f64::NAN, f64::NAN]);
        }
        let (dp, dq) = score_raw(p, q, opts.mu, s);
        (value, vec![dp * p * (1.0 - p), dq * q * (1.0 - q)])
    };
    let out = optim::maximize(
        eval,
        &theta0,
        &OptimOptions {
            max_iter: opts.max_iter,
            grad_tol: opts.grad_tol,
        },
    );

    let p = sigmoid(out.x[0]);
    let q = sigmoid(out.x[1]);
    let near_edge = |v: f64| !(1e-6..=1.0 - 1e-6).contains(&v);
    let boundary = one_sided || near_edge(p) || near_edge(q);
    let converged = out.converged && !boundary;

    let mut p_est = ParamEstimate::point("p", p);
    let mut q_est = ParamEstimate::point("q", q);
    if !boundary {
        if let Ok(d) = DiscreteSkewLogistic::with_location(p, q, opts.mu) {
            let info = match opts.se_source {
                SeSource::Observed => Some(observed_info(&d, s)),
                SeSource::Expected => expected_info(&d, s.len(), 1e-10).ok(),
            };
            if let Some((se_p, se_q)) = info.and_then(|m| m.standard_errors()) {
                let z = z_for_level(opts.ci_level);
                p_est.std_error = Some(se_p);
                p_est.ci = Some((p - z * se_p, p + z * se_p));
                q_est.std_error = Some(se_q);
                q_est.ci = Some((q - z * se_q, q + z * se_q));
            }
        }
    }

    Ok(FitResult {
        model: "dslogistic",
        method: FitMethod::Mle,
        params: vec![p_est, q_est],
        loglik: out.value,
        converged,
        boundary,
        iterations: out.iterations,
    })
}

/// Profile maximum likelihood over the integer location: fits `(p, q)` at
/// every `mu` in `[min(values), max(values)]` and keeps the best. The
/// returned result carries `mu` as a parameter (no standard error; it is
/// an integer maximizer). When `p > q` at the optimum, the fitted mode of
/// the located family equals the returned `mu`.
pub fn fit_mu_profile(s: &IntSample, opts: &FitOptions) -> Result<FitResult> {
    if s.is_empty() {
        return Err(Error::InvalidArgument("empty sample".into()));
    }
    let lo = *s.values().iter().min().expect("nonempty");
    let hi = *s.values().iter().max().expect("nonempty");
    let mut best: Option<FitResult> = None;
    let mut best_mu = lo;
    let mut warm: Option<(f64, f64)> = None;
    let mut total_iterations = 0;
    for mu in lo..=hi {
        let fit = fit_mle(s, warm, &FitOptions { mu, ..*opts })?;
        total_iterations += fit.iterations;
        if fit.converged {
            warm = fit
                .param("p")
                .zip(fit.param("q"))
                .map(|(a, b)| (a.value, b.value));
        }
        if best.as_ref().is_none_or(|b| fit.loglik > b.loglik) {
            best_mu = mu;
            best = Some(fit);
        }
    }
    let mut best = best.expect("at least one candidate");
    best.params
        .insert(0, ParamEstimate::point("mu", best_mu as f64));
    best.iterations = total_iterations;
    Ok(best)
}
