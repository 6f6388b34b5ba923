//! Deterministic point sets on S³.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::{norm4, UnitQuaternion};

/// `n` independent uniform points on S³ (four standard normals, normalized).
/// The same seed always yields the same list.
pub fn sample_uniform(seed: u64, n: usize) -> Vec<UnitQuaternion> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| uniform_point(&mut rng)).collect()
}

pub(crate) fn uniform_point<R: Rng + ?Sized>(rng: &mut R) -> UnitQuaternion {
    loop {
        let c: [f64; 4] = std::array::from_fn(|_| rng.sample(StandardNormal));
        if norm4(c) > 1e-6 {
            return UnitQuaternion::normalized(c);
        }
    }
}

// Irrational winding numbers of the super-Fibonacci spiral.
const PHI: f64 = std::f64::consts::SQRT_2;
const PSI: f64 = 1.533_751_168_755_204_3;

/// Quasi-uniform lattice of `n` points on S³ (super-Fibonacci spiral).
pub fn fibonacci_grid(n: usize) -> Vec<UnitQuaternion> {
    let nf = n as f64;
    (0..n)
        .map(|i| {
            let s = i as f64 + 0.5;
            let t = s / nf;
            let r = t.sqrt();
            let big_r = (1.0 - t).sqrt();
            let alpha = std::f64::consts::TAU * s / PHI;
            let beta = std::f64::consts::TAU * s / PSI;
            UnitQuaternion::normalized([
                r * alpha.sin(),
                r * alpha.cos(),
                big_r * beta.sin(),
                big_r * beta.cos(),
            ])
        })
        .collect()
}

/// Characteristic spacing of an `n`-point quasi-uniform set on S³: the edge of
/// a cube with volume `2π²/n`.
pub fn grid_spacing(n: usize) -> f64 {
    (2.0 * std::f64::consts::PI.powi(2) / n as f64).cbrt()
}
