//! Distance-decreasing self-maps of S³ that index fibrations.

use std::f64::consts::FRAC_PI_6;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{GeometryError, Result};
use crate::quaternion::{exp_axis, geodesic_distance, ImaginaryUnit, UnitQuaternion};

/// A map `f: S³ → S³`. Fibrations built from it are only valid when `f` is
/// strictly distance-decreasing; see [`lipschitz_estimate`].
pub trait SphereMap: Send + Sync {
    fn eval(&self, p: UnitQuaternion) -> UnitQuaternion;

    /// Short label used in reports.
    fn name(&self) -> String;
}

impl<M: SphereMap + ?Sized> SphereMap for Box<M> {
    fn eval(&self, p: UnitQuaternion) -> UnitQuaternion {
        (**self).eval(p)
    }
    fn name(&self) -> String {
        (**self).name()
    }
}

impl<M: SphereMap + ?Sized> SphereMap for &M {
    fn eval(&self, p: UnitQuaternion) -> UnitQuaternion {
        (**self).eval(p)
    }
    fn name(&self) -> String {
        (**self).name()
    }
}

/// `f ≡ c`. With `c = 1` the fibration is the Hopf fibration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstantMap(pub UnitQuaternion);

impl SphereMap for ConstantMap {
    fn eval(&self, _p: UnitQuaternion) -> UnitQuaternion {
        self.0
    }
    fn name(&self) -> String {
        format!("constant({})", self.0)
    }
}

/// The shrunken Hopf map `p ↦ p e^{iα} p⁻¹`, for `0 ≤ α ≤ π/6`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FAlpha {
    alpha: f64,
}

impl FAlpha {
    pub fn new(alpha: f64) -> Result<Self> {
        check_alpha(alpha)?;
        Ok(Self { alpha })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
}

impl SphereMap for FAlpha {
    fn eval(&self, p: UnitQuaternion) -> UnitQuaternion {
        p.conjugate_by(exp_axis(ImaginaryUnit::I, self.alpha))
    }
    fn name(&self) -> String {
        format!("f_alpha({})", self.alpha)
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    // π/6 itself must pass even after a round trip through decimal text
    if !(0.0..=FRAC_PI_6 + 1e-15).contains(&alpha) {
        return Err(GeometryError::AlphaOutOfRange(alpha));
    }
    Ok(())
}

/// The Hopf map `p ↦ p i p⁻¹` onto the unit imaginary 2-sphere.
pub fn hopf_map(p: UnitQuaternion) -> ImaginaryUnit {
    let v = p.conjugate_by(UnitQuaternion::I);
    ImaginaryUnit::new(v.x(), v.y(), v.z()).expect("conjugation preserves the norm")
}

/// `f_α(p) = p (cos α + i sin α) p⁻¹`.
pub fn f_alpha(p: UnitQuaternion, alpha: f64) -> Result<UnitQuaternion> {
    Ok(FAlpha::new(alpha)?.eval(p))
}

/// Equivalent form `cos α + π_H(p) sin α`.
pub fn f_alpha_via_hopf(p: UnitQuaternion, alpha: f64) -> Result<UnitQuaternion> {
    check_alpha(alpha)?;
    Ok(exp_axis(hopf_map(p), alpha))
}

/// `d(f_α(q p), q f_α(p) q⁻¹)`: how far `f_α` is from intertwining left
/// multiplication with conjugation.
pub fn pointwise_homogeneity_check(
    alpha: f64,
    q: UnitQuaternion,
    p: UnitQuaternion,
) -> Result<f64> {
    let f = FAlpha::new(alpha)?;
    Ok(geodesic_distance(f.eval(q * p), q.conjugate_by(f.eval(p))))
}

/// Largest sampled ratio `d(f(a), f(b)) / d(a, b)` over `n_pairs` seeded
/// uniform pairs.
pub fn lipschitz_estimate<M: SphereMap + ?Sized>(f: &M, n_pairs: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..n_pairs {
        let a = crate::quaternion::sampling_point(&mut rng);
        let b = crate::quaternion::sampling_point(&mut rng);
        let d = geodesic_distance(a, b);
        if d < 1e-12 {
            continue;
        }
        worst = worst.max(geodesic_distance(f.eval(a), f.eval(b)) / d);
    }
    worst
}
