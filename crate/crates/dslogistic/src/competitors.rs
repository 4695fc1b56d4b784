//! Competitor integer-valued distributions used for model comparison:
//! the (symmetric) discrete logistic with real location, the discrete
//! Laplace, and the discrete normal. Only the pmfs and maximum-likelihood
//! fitting are provided; that is all the comparison tables need.

use crate::error::{Error, Result};
use crate::estimation::{fit_mle, FitMethod, FitOptions, FitResult, IntSample, ParamEstimate};
use crate::math::{logit, norm_cdf_diff, sigmoid, z_for_level};
use crate::optim::{self, OptimOptions};

fn check_unit_open(name: &str, v: f64) -> Result<()> {
    if !v.is_finite() || v <= 0.0 || v >= 1.0 {
        return Err(Error::InvalidParameter(format!(
            "{name} must lie strictly in (0,1), got {v}"
        )));
    }
    Ok(())
}

/// Discrete logistic with geometric rate `p` and real location `mu`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DLogParams {
    pub p: f64,
    pub mu: f64,
}

impl DLogParams {
    pub fn new(p: f64, mu: f64) -> Result<Self> {
        check_unit_open("p", p)?;
        if !mu.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "mu must be finite, got {mu}"
            )));
        }
        Ok(DLogParams { p, mu })
    }

    /// `(1-p) p^{y-mu} / ((1+p^{y-mu})(1+p^{y-mu+1}))`, evaluated with
    /// nonpositive exponents only so large `|y - mu|` cannot overflow.
    pub fn pmf(&self, y: i64) -> f64 {
        let z = y as f64 - self.mu;
        let lp = self.p.ln();
        if z >= 0.0 {
            let w = (z * lp).exp();
            (1.0 - self.p) * w / ((1.0 + w) * (1.0 + w * self.p))
        } else {
            let w = (-(z + 1.0) * lp).exp(); // p^{-(z+1)}
            (1.0 - self.p) * w / ((1.0 + w * self.p) * (1.0 + w))
        }
    }

    pub fn ln_pmf(&self, y: i64) -> f64 {
        let z = y as f64 - self.mu;
        let lp = self.p.ln();
        if z >= 0.0 {
            let w = (z * lp).exp();
            (-self.p).ln_1p() + z * lp - w.ln_1p() - (w * self.p).ln_1p()
        } else {
            let w = (-(z + 1.0) * lp).exp();
            (-self.p).ln_1p() - (z + 1.0) * lp - (w * self.p).ln_1p() - w.ln_1p()
        }
    }
}

/// Two-sided geometric (discrete Laplace) with rates `p` (right) and `q`
/// (left).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DLaplaceParams {
    pub p: f64,
    pub q: f64,
}

impl DLaplaceParams {
    pub fn new(p: f64, q: f64) -> Result<Self> {
        check_unit_open("p", p)?;
        check_unit_open("q", q)?;
        Ok(DLaplaceParams { p, q })
    }

    /// `ln q * p^x (1-p) / ln(pq)` for `x >= 0`,
    /// `ln p * q^{-(x+1)} (1-q) / ln(pq)` for `x < 0`.
    pub fn pmf(&self, x: i64) -> f64 {
        let lp = self.p.ln();
        let lq = self.q.ln();
        let lpq = lp + lq;
        if x >= 0 {
            lq / lpq * (1.0 - self.p) * crate::math::pow01(self.p, x)
        } else {
            lp / lpq * (1.0 - self.q) * crate::math::pow01(self.q, -x - 1)
        }
    }

    pub fn ln_pmf(&self, x: i64) -> f64 {
        let lp = self.p.ln();
        let lq = self.q.ln();
        let lpq = lp + lq;
        if x >= 0 {
            (lq / lpq).ln() + (-self.p).ln_1p() + x as f64 * lp
        } else {
            (lp / lpq).ln() + (-self.q).ln_1p() + (-x - 1) as f64 * lq
        }
    }
}

/// Discrete normal: the floor of a normal variable, i.e.
/// `P(Y=y) = Phi((y+1-mu)/sigma) - Phi((y-mu)/sigma)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DNormParams {
    pub mu: f64,
    pub sigma: f64,
}

impl DNormParams {
    pub fn new(mu: f64, sigma: f64) -> Result<Self> {
        if !mu.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "mu must be finite, got {mu}"
            )));
        }
        if !sigma.is_finite() || sigma <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "sigma must be finite and > 0, got {sigma}"
            )));
        }
        Ok(DNormParams { mu, sigma })
    }

    pub fn pmf(&self, y: i64) -> f64 {
        let a = (y as f64 - self.mu) / self.sigma;
        let b = (y as f64 + 1.0 - self.mu) / self.sigma;
        norm_cdf_diff(a, b)
    }

    pub fn ln_pmf(&self, y: i64) -> f64 {
        self.pmf(y).ln()
    }
}

/// Model selector for fitting; `Dslog` routes to the skew logistic MLE so
/// all four comparison models share one entry point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelTag {
    Dslog,
    Dlog,
    Dlaplace,
    Dnorm,
}

impl ModelTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            ModelTag::Dslog => "dslogistic",
            ModelTag::Dlog => "dlog",
            ModelTag::Dlaplace => "dlaplace",
            ModelTag::Dnorm => "dnorm",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "dslog" | "dslogistic" => Ok(ModelTag::Dslog),
            "dlog" => Ok(ModelTag::Dlog),
            "dlaplace" => Ok(ModelTag::Dlaplace),
            "dnorm" => Ok(ModelTag::Dnorm),
            other => Err(Error::InvalidArgument(format!(
                "unknown model '{other}' (expected dslog, dlog, dlaplace or dnorm)"
            ))),
        }
    }

    /// All models in the comparison-table order.
    pub fn all() -> [ModelTag; 4] {
        [
            ModelTag::Dslog,
            ModelTag::Dlog,
            ModelTag::Dlaplace,
            ModelTag::Dnorm,
        ]
    }
}

/// Fit one model to the sample by maximum likelihood.
///
/// The competitor likelihoods are maximized by the same quasi-Newton
/// contract as the skew logistic fit, in transformed coordinates (logit
/// for probabilities, log for the scale, identity for real locations)
/// with finite-difference gradients; standard errors come from the
/// finite-difference observed information in the original coordinates.
pub fn fit_model(tag: ModelTag, s: &IntSample, opts: &FitOptions) -> Result<FitResult> {
    match tag {
        ModelTag::Dslog => fit_mle(s, None, opts),
        ModelTag::Dlog => fit_dlog(s, opts),
        ModelTag::Dlaplace => fit_dlaplace(s, opts),
        ModelTag::Dnorm => fit_dnorm(s, opts),
    }
}

struct GenericFit {
    theta: Vec<f64>,
    loglik: f64,
    converged: bool,
    iterations: usize,
}

fn maximize_fd<F>(ll: F, theta0: &[f64], opts: &FitOptions) -> GenericFit
where
    F: Fn(&[f64]) -> f64,
{
    let eval = |theta: &[f64]| {
        let v = ll(theta);
        if !v.is_finite() {
            return (f64::NEG_INFINITY, vec![f64::NAN; theta.len()]);
        }
        (v, optim::fd_gradient(&ll, theta))
    };
    let out = optim::maximize(
        eval,
        theta0,
        &OptimOptions {
            max_iter: opts.max_iter,
            // FD gradients carry ~1e-9 noise; don't chase below it.
            grad_tol: opts.grad_tol.max(1e-7),
        },
    );
    GenericFit {
        theta: out.x,
        loglik: out.value,
        converged: out.converged,
        iterations: out.iterations,
    }
}

/// Wald annotation of two original-scale parameters from the numeric
/// observed information at the optimum.
fn annotate_2x2<F>(
    ll_orig: F,
    values: [f64; 2],
    names: [&'static str; 2],
    level: f64,
) -> Vec<ParamEstimate>
where
    F: Fn(&[f64]) -> f64,
{
    let hess = optim::fd_hessian(&ll_orig, &values);
    let se = optim::se_from_info_2x2(-hess[0][0], -hess[0][1], -hess[1][1]);
    let z = z_for_level(level);
    let mk = |name, value, se: Option<f64>| ParamEstimate {
        name,
        value,
        std_error: se,
        ci: se.map(|s| (value - z * s, value + z * s)),
    };
    match se {
        Some((s0, s1)) => vec![
            mk(names[0], values[0], Some(s0)),
            mk(names[1], values[1], Some(s1)),
        ],
        None => vec![mk(names[0], values[0], None), mk(names[1], values[1], None)],
    }
}

fn fit_dlog(s: &IntSample, opts: &FitOptions) -> Result<FitResult> {
    if s.is_empty() {
        return Err(Error::InvalidArgument("empty sample".into()));
    }
    let ll = |theta: &[f64]| -> f64 {
        let p = sigmoid(theta[0]);
        match DLogParams::new(p, theta[1]) {
            Ok(d) => s.values().iter().map(|&x| d.ln_pmf(x)).sum(),
            Err(_) => f64::NEG_INFINITY,
        }
    };
    let out = maximize_fd(ll, &[logit(0.5), s.mean()], opts);
    let p = sigmoid(out.theta[0]);
    let mu = out.theta[1];
    let boundary = !(1e-6..=1.0 - 1e-6).contains(&p);

    let ll_orig = |v: &[f64]| match DLogParams::new(v[1], v[0]) {
        Ok(d) => s.values().iter().map(|&x| d.ln_pmf(x)).sum(),
        Err(_) => f64::NEG_INFINITY,
    };
    let params = if boundary {
        vec![ParamEstimate::point("mu", mu), ParamEstimate::point("p", p)]
    } else {
        annotate_2x2(ll_orig, [mu, p], ["mu", "p"], opts.ci_level)
    };
    Ok(FitResult {
        model: "dlog",
        method: FitMethod::Mle,
        params,
        loglik: out.loglik,
        converged: out.converged && !boundary,
        boundary,
        iterations: out.iterations,
    })
}

fn fit_dlaplace(s: &IntSample, opts: &FitOptions) -> Result<FitResult> {
    if s.is_empty() {
        return Err(Error::InvalidArgument("empty sample".into()));
    }
    let ll = |theta: &[f64]| -> f64 {
        let p = sigmoid(theta[0]);
        let q = sigmoid(theta[1]);
        match DLaplaceParams::new(p, q) {
            Ok(d) => s.values().iter().map(|&x| d.ln_pmf(x)).sum(),
            Err(_) => f64::NEG_INFINITY,
        }
    };
    let one_sided = s.s_minus() == 0 || s.s_plus() == 0;
    let out = maximize_fd(ll, &[logit(0.5), logit(0.5)], opts);
    let p = sigmoid(out.theta[0]);
    let q = sigmoid(out.theta[1]);
    let near_edge = |v: f64| !(1e-6..=1.0 - 1e-6).contains(&v);
    let boundary = one_sided || near_edge(p) || near_edge(q);

    let ll_orig = |v: &[f64]| match DLaplaceParams::new(v[0], v[1]) {
        Ok(d) => s.values().iter().map(|&x| d.ln_pmf(x)).sum(),
        Err(_) => f64::NEG_INFINITY,
    };
    let params = if boundary {
        vec![ParamEstimate::point("p", p), ParamEstimate::point("q", q)]
    } else {
        annotate_2x2(ll_orig, [p, q], ["p", "q"], opts.ci_level)
    };
    Ok(FitResult {
        model: "dlaplace",
        method: FitMethod::Mle,
        params,
        loglik: out.loglik,
        converged: out.converged && !boundary,
        boundary,
        iterations: out.iterations,
    })
}

fn fit_dnorm(s: &IntSample, opts: &FitOptions) -> Result<FitResult> {
    if s.is_empty() {
        return Err(Error::InvalidArgument("empty sample".into()));
    }
    let ll = |theta: &[f64]| -> f64 {
        match DNormParams::new(theta[0], theta[1].exp()) {
            Ok(d) => s.values().iter().map(|&x| d.ln_pmf(x)).sum(),
            Err(_) => f64::NEG_INFINITY,
        }
    };
    // E[Y] = mu - 1/2 for the floor of a normal.
    let sd0 = s.variance().sqrt().max(0.5);
    let out = maximize_fd(ll, &[s.mean() + 0.5, sd0.ln()], opts);
    let mu = out.theta[0];
    let sigma = out.theta[1].exp();
    let boundary = sigma < 1e-4;

    let ll_orig = |v: &[f64]| match DNormParams::new(v[0], v[1]) {
        Ok(d) => s.values().iter().map(|&x| d.ln_pmf(x)).sum(),
        Err(_) => f64::NEG_INFINITY,
    };
    let params = if boundary {
        vec![
            ParamEstimate::point("mu", mu),
            ParamEstimate::point("sigma", sigma),
        ]
    } else {
        annotate_2x2(ll_orig, [mu, sigma], ["mu", "sigma"], opts.ci_level)
    };
    Ok(FitResult {
        model: "dnorm",
        method: FitMethod::Mle,
        params,
        loglik: out.loglik,
        converged: out.converged && !boundary,
        boundary,
        iterations: out.iterations,
    })
}
