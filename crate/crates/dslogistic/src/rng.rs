//! Deterministic random number generation.
//!
//! Reproducibility is part of this crate's contract: the same seed must
//! produce bit-identical samples on every platform and in every release.
//! The generator is therefore fixed here rather than delegated to an
//! external crate whose streams may change between versions.
//!
//! Algorithm: xoshiro256++ (Blackman & Vigna), state seeded by expanding
//! the 64-bit seed with SplitMix64. Sub-streams for parallel work are
//! derived with [`SeededStream::derive`], which folds each path component
//! into the seed through the SplitMix64 finalizer, so `(master, i)` and
//! `(master, j)` give unrelated streams for `i != j`.

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 output function: one mixing step over a counter.
#[inline]
fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(GOLDEN);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Fold path components into a master seed, one SplitMix64 finalizer step
/// per component. This is the documented splitting rule for parallel work.
pub fn derive_seed(master: u64, path: &[u64]) -> u64 {
    let mut seed = master;
    for &component in path {
        let mut s = seed ^ component.wrapping_add(1).wrapping_mul(GOLDEN);
        seed = splitmix64(&mut s);
    }
    seed
}

/// A seeded xoshiro256++ stream producing uniforms in the open interval (0,1).
#[derive(Debug, Clone)]
pub struct SeededStream {
    state: [u64; 4],
}

impl SeededStream {
    /// Stream from a bare 64-bit seed.
    pub fn new(seed: u64) -> Self {
        let mut s = seed;
        let state = [
            splitmix64(&mut s),
            splitmix64(&mut s),
            splitmix64(&mut s),
            splitmix64(&mut s),
        ];
        SeededStream { state }
    }

    /// Stream for a position in a deterministic tree of sub-streams,
    /// e.g. `derive(master, &[scenario_index, replicate_index])`.
    pub fn derive(master: u64, path: &[u64]) -> Self {
        SeededStream::new(derive_seed(master, path))
    }

    /// Next raw 64-bit output (xoshiro256++ step).
    pub fn next_u64(&mut self) -> u64 {
        let [s0, s1, s2, s3] = self.state;
        let result = s0.wrapping_add(s3).rotate_left(23).wrapping_add(s0);
        let t = s1 << 17;
        let mut n = [s0, s1, s2, s3];
        n[2] ^= n[0];
        n[3] ^= n[1];
        n[1] ^= n[2];
        n[0] ^= n[3];
        n[2] ^= t;
        n[3] = n[3].rotate_left(45);
        self.state = n;
        result
    }

    /// Uniform draw in the open interval (0,1).
    ///
    /// Uses the top 53 bits shifted to the midpoints of a 2^-53 grid, so
    /// neither endpoint is ever returned.
    pub fn next_open01(&mut self) -> f64 {
        ((self.next_u64() >> 11) as f64 + 0.5) * (1.0 / 9_007_199_254_740_992.0)
    }
}
