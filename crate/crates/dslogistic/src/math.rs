//! Numeric helpers shared across the crate.

use std::f64::consts::SQRT_2;

/// `t^k` for `t in (0,1)` and `k >= 0`, without intermediate overflow.
///
/// Underflows to exactly 0 once `k*ln(t) < -745`, which is the correct
/// double-precision limit.
#[inline]
pub(crate) fn pow01(t: f64, k: i64) -> f64 {
    debug_assert!(k >= 0);
    if k == 0 {
        return 1.0;
    }
    let log_term = k as f64 * t.ln();
    if log_term < -745.0 {
        0.0
    } else if k <= 8192 {
        t.powi(k as i32)
    } else {
        log_term.exp()
    }
}

/// Stable logistic sigmoid.
#[inline]
pub(crate) fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

/// Inverse of [`sigmoid`] on (0,1).
#[inline]
pub(crate) fn logit(u: f64) -> f64 {
    (u / (1.0 - u)).ln()
}

/// Standard normal cdf via `erfc`.
#[inline]
pub fn norm_cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x / SQRT_2)
}

/// `Phi(b) - Phi(a)` for `a <= b`, computed on one tail to avoid cancellation
/// when both arguments sit far out on the same side.
pub fn norm_cdf_diff(a: f64, b: f64) -> f64 {
    debug_assert!(a <= b);
    if a >= 0.0 {
        0.5 * (libm::erfc(a / SQRT_2) - libm::erfc(b / SQRT_2))
    } else if b <= 0.0 {
        0.5 * (libm::erfc(-b / SQRT_2) - libm::erfc(-a / SQRT_2))
    } else {
        norm_cdf(b) - norm_cdf(a)
    }
}

/// Standard normal quantile.
///
/// Acklam's rational approximation refined by one Halley step against
/// [`norm_cdf`]; absolute error is below 1e-14 over (1e-300, 1-1e-16).
pub fn norm_quantile(u: f64) -> f64 {
    assert!(u > 0.0 && u < 1.0, "norm_quantile requires u in (0,1)");

    const A: [f64; 6] = [
        -3.969683028665376e+01,
        2.209460984245205e+02,
        -2.759285104469687e+02,
        1.38357751867269e+02,
        -3.066479806614716e+01,
        2.506628277459239e+00,
    ];
    const B: [f64; 5] = [
        -5.447609879822406e+01,
        1.615858368580409e+02,
        -1.556989798598866e+02,
        6.680131188771972e+01,
        -1.328068155288572e+01,
    ];
    const C: [f64; 6] = [
        -7.784894002430293e-03,
        -3.223964580411365e-01,
        -2.400758277161838e+00,
        -2.549732539343734e+00,
        4.374664141464968e+00,
        2.938163982698783e+00,
    ];
    const D: [f64; 4] = [
        7.784695709041462e-03,
        3.224671290700398e-01,
        2.445134137142996e+00,
        3.754408661907416e+00,
    ];
    const U_LOW: f64 = 0.02425;

    let x = if u < U_LOW {
        let z = (-2.0 * u.ln()).sqrt();
        (((((C[0] * z + C[1]) * z + C[2]) * z + C[3]) * z + C[4]) * z + C[5])
            / ((((D[0] * z + D[1]) * z + D[2]) * z + D[3]) * z + 1.0)
    } else if u <= 1.0 - U_LOW {
        let z = u - 0.5;
        let r = z * z;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * z
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    } else {
        let z = (-2.0 * (1.0 - u).ln()).sqrt();
        -((((((C[0] * z + C[1]) * z + C[2]) * z + C[3]) * z + C[4]) * z + C[5])
            / ((((D[0] * z + D[1]) * z + D[2]) * z + D[3]) * z + 1.0))
    };

    // Halley refinement.
    let e = norm_cdf(x) - u;
    let pdf = (-0.5 * x * x).exp() / (2.0 * std::f64::consts::PI).sqrt();
    let w = e / pdf;
    x - w / (1.0 + x * w / 2.0)
}

/// Two-sided z multiplier for a confidence level in (0,1).
#[inline]
pub fn z_for_level(level: f64) -> f64 {
    norm_quantile(0.5 + level / 2.0)
}

/// Regularized upper incomplete gamma function `Q(a, x)`.
///
/// Series for `x < a+1`, Lentz continued fraction otherwise; good to
/// ~1e-12 relative, which is ample for chi-square p-values.
pub fn gamma_q(a: f64, x: f64) -> f64 {
    assert!(a > 0.0 && x >= 0.0);
    if x == 0.0 {
        return 1.0;
    }
    if x < a + 1.0 {
        1.0 - gamma_p_series(a, x)
    } else {
        gamma_q_cf(a, x)
    }
}

fn ln_gamma(a: f64) -> f64 {
    libm::lgamma(a)
}

fn gamma_p_series(a: f64, x: f64) -> f64 {
    let mut ap = a;
    let mut sum = 1.0 / a;
    let mut del = sum;
    for _ in 0..500 {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if del.abs() < sum.abs() * 1e-16 {
            break;
        }
    }
    sum * (-x + a * x.ln() - ln_gamma(a)).exp()
}

fn gamma_q_cf(a: f64, x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut b = x + 1.0 - a;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..500 {
        let an = -(i as f64) * (i as f64 - a);
        b += 2.0;
        d = an * d + b;
        if d.abs() < TINY {
            d = TINY;
        }
        c = b + an / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < 1e-16 {
            break;
        }
    }
    (-x + a * x.ln() - ln_gamma(a)).exp() * h
}

/// Survival function of the chi-square distribution with `dof` degrees of
/// freedom (the p-value of an observed statistic).
pub fn chi_square_sf(stat: f64, dof: usize) -> f64 {
    gamma_q(dof as f64 / 2.0, stat / 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn norm_cdf_reference_values() {
        assert_relative_eq!(norm_cdf(0.0), 0.5, epsilon = 1e-15);
        assert_relative_eq!(norm_cdf(1.0), 0.8413447460685429, epsilon = 1e-14);
        assert_relative_eq!(norm_cdf(-1.96), 0.024997895148220435, epsilon = 1e-12);
    }

    #[test]
    fn norm_quantile_inverts_cdf() {
        for &u in &[
            1e-10,
            0.001,
            0.025,
            0.3,
            0.5,
            0.7,
            0.975,
            0.999,
            1.0 - 1e-10,
        ] {
            let x = norm_quantile(u);
            assert_relative_eq!(norm_cdf(x), u, epsilon = 1e-12, max_relative = 1e-12);
        }
        assert_relative_eq!(z_for_level(0.95), 1.959963984540054, epsilon = 1e-10);
    }

    #[test]
    fn pow01_matches_powi_and_underflows() {
        assert_eq!(pow01(0.5, 0), 1.0);
        assert_relative_eq!(pow01(0.37, 11), 0.37f64.powi(11), epsilon = 1e-15);
        assert_eq!(pow01(0.5, 3000), 0.0);
        assert!(pow01(0.999_999, 100_000) > 0.0);
    }

    #[test]
    fn chi_square_sf_reference_values() {
        // Known: P(chi2_1 > 3.841459) = 0.05, P(chi2_10 > 18.307038) = 0.05.
        assert_relative_eq!(chi_square_sf(3.8414588206941227, 1), 0.05, epsilon = 1e-8);
        assert_relative_eq!(chi_square_sf(18.307038053275146, 10), 0.05, epsilon = 1e-8);
        assert_relative_eq!(chi_square_sf(0.0, 4), 1.0, epsilon = 1e-15);
    }
}
