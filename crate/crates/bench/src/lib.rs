//! Shared inputs for the benchmarks.

use clifford_core::quaternion::sample_uniform;
use clifford_core::{GreatThreeSphere, ProductPoint};

pub const SEED: u64 = 17;

/// Seeded points of S³×S³.
pub fn product_points(n: usize) -> Vec<ProductPoint> {
    sample_uniform(SEED, 2 * n)
        .chunks(2)
        .map(|w| (w[0], w[1]))
        .collect()
}

/// Seeded pairs of great 3-spheres.
pub fn sphere_pairs(n: usize) -> Vec<(GreatThreeSphere, GreatThreeSphere)> {
    sample_uniform(SEED + 1, 4 * n)
        .chunks(4)
        .map(|w| {
            (
                GreatThreeSphere::new(w[0], w[1]),
                GreatThreeSphere::new(w[2], w[3]),
            )
        })
        .collect()
}
