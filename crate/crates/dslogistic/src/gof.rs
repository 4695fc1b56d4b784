//! Chi-square goodness-of-fit helpers used to validate the samplers.

use crate::dist::DiscreteSkewLogistic;
use crate::estimation::IntSample;
use crate::math::chi_square_sf;
use std::collections::BTreeMap;

/// Outcome of a chi-square test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GofTest {
    pub statistic: f64,
    pub dof: usize,
    pub p_value: f64,
}

/// Pool adjacent (observed, expected) cells until every pooled cell's
/// expectation reaches `min_expected`; a small leftover is merged into the
/// previous cell.
fn pool(cells: Vec<(f64, f64)>, min_expected: f64) -> Vec<(f64, f64)> {
    let mut pooled: Vec<(f64, f64)> = Vec::new();
    let mut acc = (0.0, 0.0);
    for (obs, exp) in cells {
        acc.0 += obs;
        acc.1 += exp;
        if acc.1 >= min_expected {
            pooled.push(acc);
            acc = (0.0, 0.0);
        }
    }
    if acc.1 > 0.0 {
        if let Some(last) = pooled.last_mut() {
            last.0 += acc.0;
            last.1 += acc.1;
        } else {
            pooled.push(acc);
        }
    }
    pooled
}

/// One-sample chi-square test of `s` against the exact pmf, with one cell
/// per integer in `[lo, hi]` plus the two tail cells; cells are pooled to
/// an expectation of at least 5.
pub fn chi_square_gof(s: &IntSample, d: &DiscreteSkewLogistic, lo: i64, hi: i64) -> GofTest {
    let n = s.len() as f64;
    let mut counts: BTreeMap<i64, f64> = BTreeMap::new();
    let mut left_tail_obs = 0.0;
    let mut right_tail_obs = 0.0;
    for &x in s.values() {
        if x < lo {
            left_tail_obs += 1.0;
        } else if x > hi {
            right_tail_obs += 1.0;
        } else {
            *counts.entry(x).or_insert(0.0) += 1.0;
        }
    }
    let mut cells = Vec::with_capacity((hi - lo) as usize + 3);
    cells.push((left_tail_obs, n * d.cdf(lo - 1)));
    for x in lo..=hi {
        cells.push((counts.get(&x).copied().unwrap_or(0.0), n * d.pmf(x)));
    }
    cells.push((right_tail_obs, n * d.sf(hi + 1)));

    let pooled = pool(cells, 5.0);
    let statistic: f64 = pooled
        .iter()
        .map(|(obs, exp)| (obs - exp) * (obs - exp) / exp)
        .sum();
    let dof = pooled.len().saturating_sub(1).max(1);
    GofTest {
        statistic,
        dof,
        p_value: chi_square_sf(statistic, dof),
    }
}

/// Two-sample chi-square test of homogeneity between `a` and `b`, with
/// one cell per observed integer, pooled to a combined count of at least
/// 10 per cell.
pub fn two_sample_chi_square(a: &IntSample, b: &IntSample) -> GofTest {
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let mut counts: BTreeMap<i64, (f64, f64)> = BTreeMap::new();
    for &x in a.values() {
        counts.entry(x).or_insert((0.0, 0.0)).0 += 1.0;
    }
    for &x in b.values() {
        counts.entry(x).or_insert((0.0, 0.0)).1 += 1.0;
    }
    // Pool on combined counts by reusing the expectation slot.
    let cells: Vec<(f64, f64)> = counts.values().map(|&(ca, cb)| (ca, cb)).collect();
    let mut pooled: Vec<(f64, f64)> = Vec::new();
    let mut acc = (0.0, 0.0);
    for (ca, cb) in cells {
        acc.0 += ca;
        acc.1 += cb;
        if acc.0 + acc.1 >= 10.0 {
            pooled.push(acc);
            acc = (0.0, 0.0);
        }
    }
    if acc.0 + acc.1 > 0.0 {
        if let Some(last) = pooled.last_mut() {
            last.0 += acc.0;
            last.1 += acc.1;
        } else {
            pooled.push(acc);
        }
    }

    let k1 = (nb / na).sqrt();
    let k2 = (na / nb).sqrt();
    let statistic: f64 = pooled
        .iter()
        .map(|&(ca, cb)| {
            let d = k1 * ca - k2 * cb;
            d * d / (ca + cb)
        })
        .sum();
    let dof = pooled.len().saturating_sub(1).max(1);
    GofTest {
        statistic,
        dof,
        p_value: chi_square_sf(statistic, dof),
    }
}
