//! Small dense BFGS maximizer with backtracking line search.
//!
//! All fitting in this crate happens in an unconstrained transformed
//! parameter space of dimension two, so nothing fancier is needed. The
//! objective may return `-inf` outside its effective domain; the line
//! search treats that as a rejected step.

/// Stopping controls for [`maximize`].
#[derive(Debug, Clone, Copy)]
pub struct OptimOptions {
    pub max_iter: usize,
    /// Converged when `||grad||_inf <= grad_tol * max(1, |f|)`.
    pub grad_tol: f64,
}

impl Default for OptimOptions {
    fn default() -> Self {
        OptimOptions {
            max_iter: 300,
            grad_tol: 1e-8,
        }
    }
}

/// Terminal state of a [`maximize`] run.
#[derive(Debug, Clone)]
pub struct OptimOutcome {
    pub x: Vec<f64>,
    pub value: f64,
    pub gradient: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn inf_norm(a: &[f64]) -> f64 {
    a.iter().fold(0.0, |m, v| m.max(v.abs()))
}

/// Maximize `f` from `x0`, where `eval` returns the value and gradient.
///
/// `eval(x0)` must be finite.
pub fn maximize<F>(mut eval: F, x0: &[f64], opts: &OptimOptions) -> OptimOutcome
where
    F: FnMut(&[f64]) -> (f64, Vec<f64>),
{
    let n = x0.len();
    let mut x = x0.to_vec();
    let (mut fx, mut grad) = eval(&x);
    assert!(
        fx.is_finite(),
        "objective must be finite at the start point"
    );

    // Inverse Hessian approximation (of the negated objective).
    let mut h = vec![vec![0.0; n]; n];
    for (i, row) in h.iter_mut().enumerate() {
        row[i] = 1.0;
    }

    let mut iterations = 0;
    let mut converged = inf_norm(&grad) <= opts.grad_tol * fx.abs().max(1.0);

    while !converged && iterations < opts.max_iter {
        iterations += 1;

        // Ascent direction d = H * grad.
        let mut dir: Vec<f64> = (0..n).map(|i| dot(&h[i], &grad)).collect();
        let mut slope = dot(&grad, &dir);
        if !slope.is_finite() || slope <= 0.0 {
            // Lost positive definiteness; restart from steepest ascent.
            for (i, row) in h.iter_mut().enumerate() {
                for (j, v) in row.iter_mut().enumerate() {
                    *v = if i == j { 1.0 } else { 0.0 };
                }
            }
            dir = grad.clone();
            slope = dot(&grad, &dir);
            if slope <= 0.0 {
                break;
            }
        }

        // Backtracking Armijo search.
        const C1: f64 = 1e-4;
        let mut alpha = 1.0;
        let mut accepted = None;
        while alpha > 1e-14 {
            let xt: Vec<f64> = x.iter().zip(&dir).map(|(xi, di)| xi + alpha * di).collect();
            let (ft, gt) = eval(&xt);
            if ft.is_finite() && ft >= fx + C1 * alpha * slope {
                accepted = Some((xt, ft, gt));
                break;
            }
            alpha *= 0.5;
        }
        let Some((xt, ft, gt)) = accepted else {
            break; // no progress possible along this direction
        };

        let s: Vec<f64> = xt.iter().zip(&x).map(|(a, b)| a - b).collect();
        // For maximization the curvature pair is (s, g_old - g_new).
        let y: Vec<f64> = grad.iter().zip(&gt).map(|(old, new)| old - new).collect();
        let sy = dot(&s, &y);
        if sy > 1e-12 * inf_norm(&s) * inf_norm(&y) {
            let rho = 1.0 / sy;
            // H <- (I - rho s y^T) H (I - rho y s^T) + rho s s^T
            let hy: Vec<f64> = (0..n).map(|i| dot(&h[i], &y)).collect();
            let yhy = dot(&y, &hy);
            for i in 0..n {
                for j in 0..n {
                    h[i][j] += -(s[i] * hy[j] + hy[i] * s[j]) * rho
                        + (1.0 + yhy * rho) * rho * s[i] * s[j];
                }
            }
        }

        x = xt;
        fx = ft;
        grad = gt;
        converged = inf_norm(&grad) <= opts.grad_tol * fx.abs().max(1.0);
    }

    OptimOutcome {
        x,
        value: fx,
        gradient: grad,
        iterations,
        converged,
    }
}

/// Central finite-difference gradient of a scalar function.
pub(crate) fn fd_gradient<F>(mut f: F, x: &[f64]) -> Vec<f64>
where
    F: FnMut(&[f64]) -> f64,
{
    let mut g = vec![0.0; x.len()];
    let mut xt = x.to_vec();
    for i in 0..x.len() {
        let h = 1e-6 * x[i].abs().max(1.0);
        xt[i] = x[i] + h;
        let fp = f(&xt);
        xt[i] = x[i] - h;
        let fm = f(&xt);
        xt[i] = x[i];
        g[i] = (fp - fm) / (2.0 * h);
    }
    g
}

/// Central finite-difference Hessian; used for competitor standard errors.
pub(crate) fn fd_hessian<F>(mut f: F, x: &[f64]) -> Vec<Vec<f64>>
where
    F: FnMut(&[f64]) -> f64,
{
    let n = x.len();
    let f0 = f(x);
    let steps: Vec<f64> = x.iter().map(|v| 5e-4 * v.abs().max(1.0)).collect();
    let mut hess = vec![vec![0.0; n]; n];
    let mut xt = x.to_vec();
    for i in 0..n {
        xt[i] = x[i] + steps[i];
        let fp = f(&xt);
        xt[i] = x[i] - steps[i];
        let fm = f(&xt);
        xt[i] = x[i];
        hess[i][i] = (fp - 2.0 * f0 + fm) / (steps[i] * steps[i]);
        for j in (i + 1)..n {
            xt[i] = x[i] + steps[i];
            xt[j] = x[j] + steps[j];
            let fpp = f(&xt);
            xt[j] = x[j] - steps[j];
            let fpm = f(&xt);
            xt[i] = x[i] - steps[i];
            let fmm = f(&xt);
            xt[j] = x[j] + steps[j];
            let fmp = f(&xt);
            xt[i] = x[i];
            xt[j] = x[j];
            let v = (fpp - fpm - fmp + fmm) / (4.0 * steps[i] * steps[j]);
            hess[i][j] = v;
            hess[j][i] = v;
        }
    }
    hess
}

/// Standard errors from a 2x2 information matrix (negated log-likelihood
/// Hessian): square roots of the diagonal of its inverse, or `None` when
/// the matrix is not positive definite.
pub(crate) fn se_from_info_2x2(i11: f64, i12: f64, i22: f64) -> Option<(f64, f64)> {
    let det = i11 * i22 - i12 * i12;
    if !(i11 > 0.0 && det > 0.0) {
        return None;
    }
    Some(((i22 / det).sqrt(), (i11 / det).sqrt()))
}
