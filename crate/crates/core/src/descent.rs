//! Derivative-free local refinement on S³.
//!
//! A compass search in the tangent frame `{z i, z j, z k}`: try a step of
//! length `h` along each of the six directions, move to the best improvement,
//! otherwise halve `h`. It needs no gradient, so it also works on the
//! cone-like distance functions that appear near intersecting spheres.

use crate::quaternion::UnitQuaternion;

#[derive(Debug, Clone, Copy)]
pub struct CompassSearch {
    pub initial_step: f64,
    pub min_step: f64,
    pub max_iterations: usize,
}

impl CompassSearch {
    pub fn new(initial_step: f64, max_iterations: usize) -> Self {
        Self {
            initial_step,
            min_step: 1e-12,
            max_iterations,
        }
    }

    /// Locally minimizes `f` starting from `start`; returns the point and value.
    pub fn minimize<F>(&self, f: F, start: UnitQuaternion) -> (UnitQuaternion, f64)
    where
        F: Fn(UnitQuaternion) -> f64,
    {
        let mut z = start;
        let mut value = f(z);
        let mut h = self.initial_step;
        for _ in 0..self.max_iterations {
            if h < self.min_step {
                break;
            }
            let mut best = (z, value);
            for axis in 0..3 {
                for sign in [1.0, -1.0] {
                    let mut v = [0.0; 3];
                    v[axis] = sign * h;
                    let cand = z * UnitQuaternion::exp(v);
                    let fc = f(cand);
                    if fc < best.1 {
                        best = (cand, fc);
                    }
                }
            }
            if best.1 < value {
                (z, value) = best;
            } else {
                h *= 0.5;
            }
        }
        (z, value)
    }

    pub fn maximize<F>(&self, f: F, start: UnitQuaternion) -> (UnitQuaternion, f64)
    where
        F: Fn(UnitQuaternion) -> f64,
    {
        let (z, v) = self.minimize(|q| -f(q), start);
        (z, -v)
    }
}
