//! The discrete skew logistic distribution on the integers.
//!
//! The law arises by discretizing the continuous skew logistic parent so
//! that the survival function is preserved at integer points: if `X` is
//! continuous skew logistic, `Y = floor(X)` satisfies
//! `P(Y = y) = S(y) - S(y+1)` and `P(Y >= y) = S(y)`.
//!
//! Parametrization: `p = exp(-kappa/beta)`, `q = exp(-1/(kappa*beta))`,
//! both in (0,1). The negative half-line carries total mass
//! `ln p / ln(pq)` and decays geometrically in `q`; the nonnegative
//! half-line carries `ln q / ln(pq)` and decays in `p`. An integer
//! location `mu` shifts the whole law.

use crate::continuous::ContinuousSkewLogistic;
use crate::error::{Error, Result};
use crate::math::pow01;

/// One-sided unnormalized pmf kernel:
/// `t^k (1-t) / ((1+t^k)(1+t^{k+1}))` for `k >= 0`.
///
/// This is the cancellation-free form of the difference of two logistic
/// terms; every power has a nonnegative exponent, so nothing overflows.
#[inline]
pub(crate) fn delta(t: f64, k: i64) -> f64 {
    let tk = pow01(t, k);
    let tk1 = tk * t;
    (1.0 - t) * tk / ((1.0 + tk) * (1.0 + tk1))
}

/// `ln delta(t, k)`, finite for all `k >= 0` even where `t^k` underflows.
#[inline]
pub(crate) fn ln_delta(t: f64, k: i64) -> f64 {
    let tk = pow01(t, k);
    (-t).ln_1p() + k as f64 * t.ln() - tk.ln_1p() - (tk * t).ln_1p()
}

/// How a [`MomentPair`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MomentMethod {
    /// Closed-form approximation that treats the discarded fractional part
    /// as an independent uniform(0,1) variable.
    ClosedFormApprox,
    /// Direct series summation with an analytic tail bound; this is the
    /// oracle of record when the two disagree.
    ExactSeries,
}

/// Mean and variance of the distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentPair {
    pub mean: f64,
    pub variance: f64,
    pub method: MomentMethod,
}

/// Discrete skew logistic distribution `(p, q)` with integer location `mu`.
///
/// ```
/// use dslogistic::DiscreteSkewLogistic;
///
/// let d = DiscreteSkewLogistic::new(0.5, 0.5)?;
/// assert!((d.pmf(0) - 1.0 / 6.0).abs() < 1e-15);
/// assert_eq!(d.mode(), vec![-1, 0]);
/// assert_eq!(d.quantile(0.5)?, -1);
/// # Ok::<(), dslogistic::Error>(())
/// ```
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscreteSkewLogistic {
    p: f64,
    q: f64,
    mu: i64,
}

impl DiscreteSkewLogistic {
    /// Distribution with location 0. Both parameters must lie strictly
    /// inside (0,1); the boundary values degenerate every normalizer.
    pub fn new(p: f64, q: f64) -> Result<Self> {
        Self::with_location(p, q, 0)
    }

    /// Distribution shifted to integer location `mu`.
    pub fn with_location(p: f64, q: f64, mu: i64) -> Result<Self> {
        for (name, v) in [("p", p), ("q", q)] {
            if !v.is_finite() || v <= 0.0 || v >= 1.0 {
                return Err(Error::InvalidParameter(format!(
                    "{name} must lie strictly in (0,1), got {v}"
                )));
            }
        }
        Ok(DiscreteSkewLogistic { p, q, mu })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn mu(&self) -> i64 {
        self.mu
    }

    /// Branch weights `(2 ln p / ln(pq), 2 ln q / ln(pq))`; both lie in
    /// (0,2) and the corresponding half-line masses are half of each.
    #[inline]
    pub(crate) fn weights(&self) -> (f64, f64) {
        let lp = self.p.ln();
        let lq = self.q.ln();
        let lpq = lp + lq;
        (2.0 * lp / lpq, 2.0 * lq / lpq)
    }

    /// Continuous parent with `kappa = sqrt(ln p / ln q)`,
    /// `beta = 1/sqrt(ln p ln q)`. The location is not carried over; the
    /// floor sampler re-applies it after discretization.
    pub fn to_continuous(&self) -> ContinuousSkewLogistic {
        let lp = self.p.ln();
        let lq = self.q.ln();
        let kappa = (lp / lq).sqrt();
        let beta = 1.0 / (lp * lq).sqrt();
        ContinuousSkewLogistic::new(kappa, beta)
            .expect("valid (p,q) always maps to valid (kappa,beta)")
    }

    /// Inverse of [`to_continuous`](Self::to_continuous):
    /// `p = exp(-kappa/beta)`, `q = exp(-1/(kappa*beta))`.
    ///
    /// Errors if the map underflows out of (0,1) for extreme inputs.
    pub fn from_continuous(c: &ContinuousSkewLogistic, mu: i64) -> Result<Self> {
        let p = (-c.kappa() / c.beta()).exp();
        let q = (-1.0 / (c.kappa() * c.beta())).exp();
        Self::with_location(p, q, mu)
    }

    /// Probability mass at integer `x`.
    pub fn pmf(&self, x: i64) -> f64 {
        let y = x - self.mu;
        let (c_minus, c_plus) = self.weights();
        if y >= 0 {
            c_plus * delta(self.p, y)
        } else {
            c_minus * delta(self.q, -y - 1)
        }
    }

    /// Natural log of the pmf, finite for every integer `x`.
    pub fn ln_pmf(&self, x: i64) -> f64 {
        let y = x - self.mu;
        let (c_minus, c_plus) = self.weights();
        if y >= 0 {
            c_plus.ln() + ln_delta(self.p, y)
        } else {
            c_minus.ln() + ln_delta(self.q, -y - 1)
        }
    }

    /// `P(X <= x)`.
    pub fn cdf(&self, x: i64) -> f64 {
        self.cdf_centered(x - self.mu)
    }

    /// cdf of the location-0 law.
    fn cdf_centered(&self, y: i64) -> f64 {
        let (c_minus, c_plus) = self.weights();
        if y >= 0 {
            let s = pow01(self.p, y + 1);
            1.0 - c_plus * s / (1.0 + s)
        } else {
            let s = pow01(self.q, -y - 1);
            c_minus * s / (1.0 + s)
        }
    }

    /// Survival function with the convention `S(x) = P(X >= x)`, the
    /// convention under which the discretization identity
    /// `pmf(x) = S(x) - S(x+1)` and the closed-form hazard both hold.
    pub fn sf(&self, x: i64) -> f64 {
        let y = x - self.mu;
        let (c_minus, c_plus) = self.weights();
        if y >= 0 {
            let s = pow01(self.p, y);
            c_plus * s / (1.0 + s)
        } else {
            let s = pow01(self.q, -y);
            1.0 - c_minus * s / (1.0 + s)
        }
    }

    /// Discrete hazard `pmf(x) / P(X >= x)`, in (0,1).
    ///
    /// On the nonnegative branch this collapses to
    /// `(1-p) / (1 + p^{x-mu+1})`, which tends to `1-p` as `x` grows.
    pub fn hazard(&self, x: i64) -> f64 {
        let y = x - self.mu;
        if y >= 0 {
            (1.0 - self.p) / (1.0 + pow01(self.p, y + 1))
        } else {
            self.pmf(x) / self.sf(x)
        }
    }

    /// `pmf(x+1) / pmf(x)`; greater than 1 strictly left of the mode
    /// region and less than 1 from the mode on (unimodality).
    pub fn pmf_ratio(&self, x: i64) -> f64 {
        let y = x - self.mu;
        if y >= 0 {
            let p = self.p;
            p * (1.0 + pow01(p, y)) / (1.0 + pow01(p, y + 2))
        } else if y <= -2 {
            let q = self.q;
            let k = -y - 1; // >= 1
            (1.0 + pow01(q, k + 1)) / (q * (1.0 + pow01(q, k - 1)))
        } else {
            // crossing from the negative to the nonnegative branch
            self.pmf(x + 1) / self.pmf(x)
        }
    }

    /// Smallest integer `x` with `cdf(x) >= gamma`.
    ///
    /// A closed-form candidate from inverting each cdf branch is corrected
    /// by a local search, so the result satisfies the defining inequality
    /// exactly rather than up to floating-point rounding of the logs.
    pub fn quantile(&self, gamma: f64) -> Result<i64> {
        if !(gamma > 0.0 && gamma < 1.0) {
            return Err(Error::InvalidArgument(format!(
                "quantile order must lie in (0,1), got {gamma}"
            )));
        }
        let lp = self.p.ln();
        let lq = self.q.ln();
        let lpq = lp + lq;
        let f_minus1 = lp / lpq; // cdf(-1) of the centered law

        let guess = if gamma > f_minus1 {
            let r = (1.0 - gamma) * lpq / (2.0 * lq);
            let v = r / (1.0 - r);
            (v.ln() / lp).ceil() - 1.0
        } else {
            let v = 2.0 * lp / (gamma * lpq) - 1.0;
            (v.ln() / lq).ceil() - 1.0
        };
        let mut y = if guess.is_finite() {
            guess.clamp(-4.0e18, 4.0e18) as i64
        } else {
            0
        };
        while self.cdf_centered(y) < gamma {
            y += 1;
        }
        while y > i64::MIN && self.cdf_centered(y - 1) >= gamma {
            y -= 1;
        }
        Ok(y + self.mu)
    }

    /// Median as `quantile(1/2)`.
    pub fn median(&self) -> i64 {
        self.quantile(0.5).expect("0.5 is a valid quantile order")
    }

    /// Literal evaluation of the two-case closed-form median, kept only
    /// for cross-checking against [`median`](Self::median).
    ///
    /// The case condition `q > p^{(1+p)/(3p-1)}` is reproduced as stated.
    /// It is singular at `p = 1/3` and frequently selects the branch whose
    /// formula does not invert the cdf on that side (the argument of the
    /// inner log can then be nonpositive, yielding `None`). Choosing the
    /// branch by the sign of `p - q` instead makes the formulas reproduce
    /// cdf inversion; see the module tests. The search-based
    /// [`median`](Self::median) is the authoritative definition.
    pub fn median_closed_form(&self) -> Option<i64> {
        let (p, q) = (self.p, self.q);
        let use_first = q > p.powf((1.0 + p) / (3.0 * p - 1.0));
        let y = if use_first {
            self.median_formula_log_p()
        } else {
            self.median_formula_log_q()
        };
        y.is_finite().then(|| y as i64 + self.mu)
    }

    /// First median branch: `ceil(log_p(ln(pq) / ln(q^3/p))) - 1`.
    /// Inverts the nonnegative cdf branch at level 1/2, so it is the right
    /// formula when `p > q`.
    fn median_formula_log_p(&self) -> f64 {
        let lp = self.p.ln();
        let lq = self.q.ln();
        (((lp + lq) / (3.0 * lq - lp)).ln() / lp).ceil() - 1.0
    }

    /// Second median branch: `ceil(log_q(ln(p^3/q) / ln(pq))) - 1`.
    /// Inverts the negative cdf branch, the right formula when `p < q`.
    fn median_formula_log_q(&self) -> f64 {
        let lp = self.p.ln();
        let lq = self.q.ln();
        (((3.0 * lp - lq) / (lp + lq)).ln() / lq).ceil() - 1.0
    }

    /// Mode set: `{mu}` if `p > q`, `{mu - 1}` if `p < q`, both if `p = q`.
    pub fn mode(&self) -> Vec<i64> {
        if self.p > self.q {
            vec![self.mu]
        } else if self.p < self.q {
            vec![self.mu - 1]
        } else {
            vec![self.mu - 1, self.mu]
        }
    }

    /// Half-width `B` such that the mass outside `[mu - B, mu + B]` is
    /// below `eps`, from the geometric tail bounds
    /// `P(X > mu + B) <= 2 p^{B+1}` and `P(X < mu - B) <= 2 q^B`.
    pub(crate) fn support_half_width(&self, eps: f64) -> i64 {
        let target = (eps / 4.0).ln();
        let b = (target / self.p.ln()).max(target / self.q.ln()).ceil();
        (b as i64 + 1).max(2)
    }

    /// Closed-form moment approximation.
    ///
    /// The continuous parent has mean `2 ln2 ln(p/q) / (ln p ln q)` and the
    /// discretized variable is treated as that mean minus an independent
    /// uniform(0,1) fractional part, so `1/2` is subtracted from the mean
    /// and `1/12` added to the variance. Cross-checked against the series
    /// in [`mean_variance_exact`](Self::mean_variance_exact); the sign of
    /// the mean term is the one the summation confirms.
    pub fn mean_variance_approx(&self) -> MomentPair {
        let lp = self.p.ln();
        let lq = self.q.ln();
        let lpq = lp + lq;
        let ln2 = std::f64::consts::LN_2;
        let cont_mean = 2.0 * ln2 * (lp - lq) / (lp * lq);
        let pi2_3 = std::f64::consts::PI * std::f64::consts::PI / 3.0;
        let cont_var =
            (lp.powi(3) + lq.powi(3)) / (lpq * (lp * lq).powi(2)) * pi2_3 - cont_mean * cont_mean;
        MomentPair {
            mean: cont_mean - 0.5 + self.mu as f64,
            variance: cont_var + 1.0 / 12.0,
            method: MomentMethod::ClosedFormApprox,
        }
    }

    /// Mean and variance by summing the pmf until the analytic geometric
    /// tail bound drops below `tol`. This is the oracle of record for
    /// moment values.
    pub fn mean_variance_exact(&self, tol: f64) -> Result<MomentPair> {
        if tol.is_nan() || tol <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "tolerance must be > 0, got {tol}"
            )));
        }
        let (c_minus, c_plus) = self.weights();
        let mut mass = 0.0;
        let mut m1 = 0.0;
        let mut m2 = 0.0;
        let mut k: i64 = 0;
        loop {
            // positive side value k, negative side value -1-k
            let fp = c_plus * delta(self.p, k);
            let fm = c_minus * delta(self.q, k);
            let xp = k as f64;
            let xm = -(k as f64) - 1.0;
            mass += fp + fm;
            m1 += xp * fp + xm * fm;
            m2 += xp * xp * fp + xm * xm * fm;
            k += 1;
            // Sum_{m >= start} m^2 t^m, closed form.
            let sq_tail = |t: f64, start: i64| {
                let s = start as f64;
                let r = 1.0 - t;
                pow01(t, start) * (s * s / r + 2.0 * s * t / (r * r) + t * (1.0 + t) / (r * r * r))
            };
            let pos_bound = 2.0 * sq_tail(self.p, k.max(1));
            let neg_bound = 2.0 / self.q * sq_tail(self.q, k + 1);
            if pos_bound + neg_bound < tol / 2.0 && k >= 2 {
                break;
            }
        }
        debug_assert!((mass - 1.0).abs() < tol.max(1e-12));
        let mean = m1 + self.mu as f64;
        let variance = (m2 - m1 * m1).max(0.0);
        Ok(MomentPair {
            mean,
            variance,
            method: MomentMethod::ExactSeries,
        })
    }
}
