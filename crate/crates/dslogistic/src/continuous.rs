//! Continuous skew logistic distribution, the parent law under the
//! survival-function discretization.
//!
//! The distribution is a two-piece logistic with skew parameter `kappa`
//! and scale `beta`: the negative half-line decays at rate `1/(kappa*beta)`
//! and the nonnegative half-line at rate `kappa/beta`. It is needed here
//! for the floor-of-continuous sampling route and as the independent
//! oracle behind the discrete pmf.

use crate::error::{Error, Result};

/// Parameters of the continuous skew logistic law.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContinuousSkewLogistic {
    kappa: f64,
    beta: f64,
}

impl ContinuousSkewLogistic {
    /// Requires `kappa > 0` and `beta > 0`, both finite.
    pub fn new(kappa: f64, beta: f64) -> Result<Self> {
        if !kappa.is_finite() || kappa <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "kappa must be finite and > 0, got {kappa}"
            )));
        }
        if !beta.is_finite() || beta <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "beta must be finite and > 0, got {beta}"
            )));
        }
        Ok(ContinuousSkewLogistic { kappa, beta })
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Cumulative distribution function. Continuous and strictly
    /// increasing, with `cdf(0) = kappa^2 / (1 + kappa^2)`.
    pub fn cdf(&self, x: f64) -> f64 {
        let k2 = self.kappa * self.kappa;
        if x < 0.0 {
            let e = (-x / (self.kappa * self.beta)).exp();
            2.0 * k2 / (1.0 + k2) / (1.0 + e)
        } else {
            let e = (-x * self.kappa / self.beta).exp();
            k2 / (1.0 + k2) + 2.0 / (1.0 + k2) * (1.0 / (1.0 + e) - 0.5)
        }
    }

    /// Survival function `P(X > x)`.
    pub fn sf(&self, x: f64) -> f64 {
        let k2 = self.kappa * self.kappa;
        if x < 0.0 {
            let e = (-x / (self.kappa * self.beta)).exp();
            1.0 - 2.0 * k2 / (1.0 + k2) / (1.0 + e)
        } else {
            let e = (-x * self.kappa / self.beta).exp();
            2.0 / (1.0 + k2) * (e / (1.0 + e))
        }
    }

    /// Exact inverse of [`cdf`](Self::cdf) for `u` in (0,1).
    ///
    /// Piecewise closed form around the branch point `cdf(0)`; both pieces
    /// are evaluated in a form that stays accurate as `u` approaches
    /// either endpoint.
    pub fn quantile(&self, u: f64) -> Result<f64> {
        if !(u > 0.0 && u < 1.0) {
            return Err(Error::InvalidArgument(format!(
                "quantile level must lie in (0,1), got {u}"
            )));
        }
        Ok(self.quantile_unchecked(u))
    }

    pub(crate) fn quantile_unchecked(&self, u: f64) -> f64 {
        let k2 = self.kappa * self.kappa;
        let f0 = k2 / (1.0 + k2);
        if u < f0 {
            // 1 + e^{-x/(kappa beta)} = 2 k2 / ((1+k2) u)
            let e = 2.0 * k2 / ((1.0 + k2) * u) - 1.0;
            -self.kappa * self.beta * e.ln()
        } else {
            // 1 - s = (1+k2)(1-u)/2 computed directly to dodge cancellation
            // as u -> 1.
            let t = (1.0 + k2) * (1.0 - u) / 2.0;
            self.beta / self.kappa * ((-t).ln_1p() - t.ln())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn rejects_bad_parameters() {
        assert!(ContinuousSkewLogistic::new(0.0, 1.0).is_err());
        assert!(ContinuousSkewLogistic::new(1.0, -1.0).is_err());
        assert!(ContinuousSkewLogistic::new(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn symmetric_case_is_standard_logistic() {
        let c = ContinuousSkewLogistic::new(1.0, 1.0).unwrap();
        assert_relative_eq!(c.cdf(0.0), 0.5, epsilon = 1e-15);
        // Standard logistic cdf at 1.
        assert_relative_eq!(c.cdf(1.0), 1.0 / (1.0 + (-1.0f64).exp()), epsilon = 1e-14);
    }

    #[test]
    fn branch_point_value() {
        // cdf(0) = kappa^2/(1+kappa^2); kappa=2 gives 4/5.
        let c = ContinuousSkewLogistic::new(2.0, 1.0).unwrap();
        assert_relative_eq!(c.cdf(0.0), 0.8, epsilon = 1e-15);
        assert_relative_eq!(c.sf(0.0), 0.2, epsilon = 1e-15);
    }

    #[test]
    fn cdf_sf_complementarity_and_monotonicity() {
        let c = ContinuousSkewLogistic::new(0.7, 1.9).unwrap();
        let mut prev = 0.0;
        for i in -60..=60 {
            let x = i as f64 / 4.0;
            let f = c.cdf(x);
            assert_relative_eq!(f + c.sf(x), 1.0, epsilon = 1e-12);
            assert!(f >= prev);
            prev = f;
        }
        assert!(c.cdf(-1e60) == 0.0 || c.cdf(-1e60) < 1e-12);
        assert!(c.cdf(1e60) > 1.0 - 1e-12);
    }

    #[test]
    fn quantile_round_trip() {
        for &(kappa, beta) in &[(1.0, 1.0), (2.0, 0.5), (0.4, 3.0)] {
            let c = ContinuousSkewLogistic::new(kappa, beta).unwrap();
            for &x in &[-3.0, -0.5, 0.0, 0.5, 3.0] {
                let u = c.cdf(x);
                assert_relative_eq!(c.quantile(u).unwrap(), x, epsilon = 1e-9);
            }
            for &u in &[1e-9, 0.01, 0.3, 0.5, 0.9, 1.0 - 1e-12] {
                let x = c.quantile(u).unwrap();
                assert_relative_eq!(c.cdf(x), u, epsilon = 1e-10, max_relative = 1e-10);
            }
        }
    }

    #[test]
    fn quantile_rejects_out_of_range() {
        let c = ContinuousSkewLogistic::new(1.0, 1.0).unwrap();
        assert!(c.quantile(0.0).is_err());
        assert!(c.quantile(1.0).is_err());
        assert!(c.quantile(-0.2).is_err());
    }
}
