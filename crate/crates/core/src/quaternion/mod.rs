//! Unit quaternions as points of S³ and the round metric on them.
//!
//! Every constructor and product renormalizes, so values stay on the unit
//! sphere to within a few ulps even through long sweep loops.

mod circle;
mod sampling;

pub use circle::{CircleIntersection, GreatCircle};
pub(crate) use sampling::uniform_point as sampling_point;
pub use sampling::{fibonacci_grid, grid_spacing, sample_uniform};

use std::fmt;
use std::ops::{Mul, Neg};

use crate::error::{GeometryError, Result};

/// Tolerance on the unit-norm and zero-real-part constraints.
pub const UNIT_TOL: f64 = 1e-12;

/// Leading components smaller than this are skipped when fixing the sign of a pair.
pub const SIGN_TOL: f64 = 1e-9;

/// A point of S³, stored as `w + x i + y j + z k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitQuaternion {
    w: f64,
    x: f64,
    y: f64,
    z: f64,
}

impl UnitQuaternion {
    pub const ONE: Self = Self::raw(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::raw(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::raw(0.0, 0.0, 1.0, 0.0);
    pub const K: Self = Self::raw(0.0, 0.0, 0.0, 1.0);

    const fn raw(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    /// Normalizes `(w, x, y, z)` onto S³.
    pub fn new(w: f64, x: f64, y: f64, z: f64) -> Result<Self> {
        Self::from_array([w, x, y, z])
    }

    pub fn from_array(c: [f64; 4]) -> Result<Self> {
        let n = norm4(c);
        if n <= 1e-300 || !n.is_finite() {
            return Err(GeometryError::ZeroNorm(n));
        }
        Ok(Self::raw(c[0] / n, c[1] / n, c[2] / n, c[3] / n))
    }

    /// Normalization for vectors already known to be far from zero.
    pub(crate) fn normalized(c: [f64; 4]) -> Self {
        let n = norm4(c);
        debug_assert!(n > 1e-300, "normalizing a zero vector");
        Self::raw(c[0] / n, c[1] / n, c[2] / n, c[3] / n)
    }

    pub fn w(&self) -> f64 {
        self.w
    }
    pub fn x(&self) -> f64 {
        self.x
    }
    pub fn y(&self) -> f64 {
        self.y
    }
    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn norm(&self) -> f64 {
        norm4(self.to_array())
    }

    /// Euclidean inner product in R⁴.
    pub fn dot(&self, other: &Self) -> f64 {
        self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn conjugate(&self) -> Self {
        Self::raw(self.w, -self.x, -self.y, -self.z)
    }

    /// Equal to the conjugate on S³.
    pub fn inverse(&self) -> Self {
        self.conjugate()
    }

    /// Sandwich product `self · x · self⁻¹`.
    pub fn conjugate_by(&self, x: Self) -> Self {
        *self * x * self.inverse()
    }

    /// Imaginary part as a 3-vector.
    pub fn vector(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    /// Round distance on S³, in `[0, π]`.
    pub fn distance(&self, other: &Self) -> f64 {
        geodesic_distance(*self, *other)
    }

    /// Writes `self = cos t + u sin t` with `t` in `[0, π]`. The axis is `None`
    /// when the point is ±1 to within rounding.
    pub fn axis_angle(&self) -> (Option<ImaginaryUnit>, f64) {
        let s = norm3(self.vector());
        let angle = s.atan2(self.w);
        if s < 1e-15 {
            return (None, angle);
        }
        let [x, y, z] = self.vector();
        (
            Some(ImaginaryUnit(Self::raw(0.0, x / s, y / s, z / s))),
            angle,
        )
    }

    /// Logarithm as a tangent vector at 1: `axis · angle`.
    pub fn log(&self) -> [f64; 3] {
        match self.axis_angle() {
            (Some(u), t) => {
                let [x, y, z] = u.vector();
                [x * t, y * t, z * t]
            }
            (None, _) => [0.0; 3],
        }
    }

    /// Inverse of [`log`](Self::log): `exp(v) = cos|v| + (v/|v|) sin|v|`.
    pub fn exp(v: [f64; 3]) -> Self {
        let t = norm3(v);
        if t < 1e-300 {
            return Self::ONE;
        }
        let s = t.sin() / t;
        Self::normalized([t.cos(), v[0] * s, v[1] * s, v[2] * s])
    }

    pub fn is_unit(&self) -> bool {
        (self.norm() - 1.0).abs() <= UNIT_TOL
    }
}

impl Mul for UnitQuaternion {
    type Output = Self;

    /// Hamilton product, renormalized.
    fn mul(self, r: Self) -> Self {
        let (a, b, c, d) = (self.w, self.x, self.y, self.z);
        let (e, f, g, h) = (r.w, r.x, r.y, r.z);
        Self::normalized([
            a * e - b * f - c * g - d * h,
            a * f + b * e + c * h - d * g,
            a * g - b * h + c * e + d * f,
            a * h + b * g - c * f + d * e,
        ])
    }
}

impl Neg for UnitQuaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self::raw(-self.w, -self.x, -self.y, -self.z)
    }
}

impl fmt::Display for UnitQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:+}i {:+}j {:+}k", self.w, self.x, self.y, self.z)
    }
}

/// A unit quaternion with zero real part, i.e. a point of the 2-sphere of
/// imaginary units. These are exactly the square roots of −1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImaginaryUnit(UnitQuaternion);

impl ImaginaryUnit {
    pub const I: Self = Self(UnitQuaternion::I);
    pub const J: Self = Self(UnitQuaternion::J);
    pub const K: Self = Self(UnitQuaternion::K);

    /// Normalizes `(x, y, z)` to a unit imaginary quaternion.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        UnitQuaternion::new(0.0, x, y, z).map(Self)
    }

    /// Accepts `q` only if its real part vanishes to within 1e-12.
    pub fn try_from_quaternion(q: UnitQuaternion) -> Result<Self> {
        if q.w.abs() > UNIT_TOL {
            return Err(GeometryError::NotPurelyImaginary(q.w));
        }
        Self::new(q.x, q.y, q.z)
    }

    /// `j cos θ + k sin θ`, the unit on the great circle through j and k.
    pub fn j_theta(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self(UnitQuaternion::normalized([0.0, 0.0, c, s]))
    }

    pub fn as_quaternion(&self) -> UnitQuaternion {
        self.0
    }

    pub fn vector(&self) -> [f64; 3] {
        self.0.vector()
    }

    pub fn neg(&self) -> Self {
        Self(-self.0)
    }

    /// Completes `self` to a positively oriented orthonormal basis
    /// `(self, u, v)` of the imaginary quaternions, with `v = self · u`.
    ///
    /// `u` is built from the standard unit least aligned with `self`, ties
    /// going to i, then j, so `i ↦ (j, k)` and `k ↦ (i, j)`.
    pub fn orthonormal_completion(&self) -> (Self, Self) {
        let a = self.vector();
        let units = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
        let mut best = 0;
        for idx in 1..3 {
            if a[idx].abs() < a[best].abs() - 1e-12 {
                best = idx;
            }
        }
        let e = units[best];
        let proj = a[best];
        let u = [e[0] - proj * a[0], e[1] - proj * a[1], e[2] - proj * a[2]];
        let u = Self(UnitQuaternion::normalized([0.0, u[0], u[1], u[2]]));
        let v = self.0 * u.0;
        // v is imaginary up to rounding; drop the residue.
        let v = Self(UnitQuaternion::normalized([0.0, v.x, v.y, v.z]));
        (u, v)
    }
}

impl From<ImaginaryUnit> for UnitQuaternion {
    fn from(u: ImaginaryUnit) -> Self {
        u.0
    }
}

/// `cos t + u sin t`: the one-parameter subgroup through `u`.
pub fn exp_axis(u: ImaginaryUnit, t: f64) -> UnitQuaternion {
    let (s, c) = t.sin_cos();
    let [x, y, z] = u.vector();
    UnitQuaternion::normalized([c, x * s, y * s, z * s])
}

/// Round distance on S³ in `[0, π]`.
///
/// Evaluated as `2·atan2(|a − b|, |a + b|)`, which equals `arccos⟨a, b⟩` but
/// keeps full relative precision near 0 and π, where arccos loses half the
/// digits.
pub fn geodesic_distance(a: UnitQuaternion, b: UnitQuaternion) -> f64 {
    let (a, b) = (a.to_array(), b.to_array());
    let diff = norm4([a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]]);
    let sum = norm4([a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]);
    2.0 * diff.atan2(sum)
}

/// Midpoint of the minimizing geodesic from `a` to `b`, as `a·(a⁻¹b)^{1/2}`.
pub fn geodesic_midpoint(a: UnitQuaternion, b: UnitQuaternion) -> Result<UnitQuaternion> {
    let r = a.inverse() * b;
    // sqrt(r) = (1 + r)/|1 + r| for r ≠ −1
    let half = [1.0 + r.w, r.x, r.y, r.z];
    if norm4(half) < 1e-9 {
        return Err(GeometryError::AntipodalMidpoint);
    }
    Ok(a * UnitQuaternion::normalized(half))
}

/// Picks the representative of `{(p, q), (−p, −q)}` whose first component of
/// `p` above 1e-9 in magnitude is positive.
pub fn canonicalize_sign(
    pair: (UnitQuaternion, UnitQuaternion),
) -> (UnitQuaternion, UnitQuaternion) {
    let (p, q) = pair;
    let lead = p
        .to_array()
        .into_iter()
        .chain(q.to_array())
        .find(|c| c.abs() > SIGN_TOL)
        .unwrap_or(1.0);
    if lead < 0.0 {
        (-p, -q)
    } else {
        (p, q)
    }
}

pub(crate) fn norm4(c: [f64; 4]) -> f64 {
    // hypot-style scaling is unnecessary: inputs are O(1)
    (c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3]).sqrt()
}

pub(crate) fn norm3(c: [f64; 3]) -> f64 {
    (c[0] * c[0] + c[1] * c[1] + c[2] * c[2]).sqrt()
}
