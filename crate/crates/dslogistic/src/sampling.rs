//! Random-variate generation for the discrete skew logistic law, by two
//! independent routes that cross-validate each other:
//!
//! - inversion of the discrete cdf (quantile of a uniform draw), and
//! - flooring a draw from the continuous parent.
//!
//! Both routes consume exactly one uniform per variate, so identical
//! streams produce pairable sequences.

use crate::dist::DiscreteSkewLogistic;
use crate::estimation::IntSample;
use crate::rng::SeededStream;

/// Inverse-transform sampling: each draw is `quantile(U)`.
pub fn sample_inversion(
    d: &DiscreteSkewLogistic,
    stream: &mut SeededStream,
    n: usize,
) -> IntSample {
    let values = (0..n)
        .map(|_| {
            let u = stream.next_open01();
            d.quantile(u).expect("u is strictly inside (0,1)")
        })
        .collect();
    IntSample::new(values)
}

/// Floor-of-continuous sampling: draws `X` from the continuous parent by
/// inverting its cdf and returns `floor(X) + mu`. Distributionally
/// identical to [`sample_inversion`].
pub fn sample_floor_continuous(
    d: &DiscreteSkewLogistic,
    stream: &mut SeededStream,
    n: usize,
) -> IntSample {
    let parent = d.to_continuous();
    let values = (0..n)
        .map(|_| {
            let u = stream.next_open01();
            parent.quantile_unchecked(u).floor() as i64 + d.mu()
        })
        .collect();
    IntSample::new(values)
}
