//! Shared input builders for the kernel benchmarks.

use densepart_core::weights::{Provenance, WeightMatrix};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Symmetric zero-diagonal matrix with entries uniform in `[-scale, scale]`.
pub fn random_matrix(n: usize, scale: f64, seed: u64) -> WeightMatrix<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    WeightMatrix::from_pair_fn(n, Provenance::Raw, |_, _| {
        scale * (2.0 * (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64 - 1.0)
    })
}

/// Symmetric ±1 sign matrix.
pub fn sign_matrix(n: usize, seed: u64) -> WeightMatrix<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    WeightMatrix::from_pair_fn(n, Provenance::Raw, |_, _| {
        if rng.next_u64() & 1 == 1 {
            1.0
        } else {
            -1.0
        }
    })
}
