//! Isometries of S³ and of S³×S³ built from quaternion sandwiches.

use super::sphere::{GreatThreeSphere, ProductPoint};
use crate::quaternion::UnitQuaternion;

/// The orientation-preserving isometry `x ↦ l x r⁻¹` of S³.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereIsometry {
    pub left: UnitQuaternion,
    pub right: UnitQuaternion,
}

impl SphereIsometry {
    pub const IDENTITY: Self = Self {
        left: UnitQuaternion::ONE,
        right: UnitQuaternion::ONE,
    };

    pub fn new(left: UnitQuaternion, right: UnitQuaternion) -> Self {
        Self { left, right }
    }

    /// `x ↦ q x`
    pub fn left_multiplication(q: UnitQuaternion) -> Self {
        Self::new(q, UnitQuaternion::ONE)
    }

    /// `x ↦ x q`
    pub fn right_multiplication(q: UnitQuaternion) -> Self {
        Self::new(UnitQuaternion::ONE, q.inverse())
    }

    /// `x ↦ q x q⁻¹`
    pub fn conjugation(q: UnitQuaternion) -> Self {
        Self::new(q, q)
    }

    pub fn apply(&self, x: UnitQuaternion) -> UnitQuaternion {
        self.left * x * self.right.inverse()
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &Self) -> Self {
        Self::new(self.left * other.left, self.right * other.right)
    }

    pub fn inverse(&self) -> Self {
        Self::new(self.left.inverse(), self.right.inverse())
    }
}

/// An element of SO(4)×SO(4) acting factorwise on S³×S³.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairIsometry {
    pub first: SphereIsometry,
    pub second: SphereIsometry,
}

impl PairIsometry {
    pub const IDENTITY: Self = Self {
        first: SphereIsometry::IDENTITY,
        second: SphereIsometry::IDENTITY,
    };

    pub fn new(first: SphereIsometry, second: SphereIsometry) -> Self {
        Self { first, second }
    }

    pub fn apply(&self, (x, y): ProductPoint) -> ProductPoint {
        (self.first.apply(x), self.second.apply(y))
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self::new(
            self.first.compose(&other.first),
            self.second.compose(&other.second),
        )
    }

    pub fn inverse(&self) -> Self {
        Self::new(self.first.inverse(), self.second.inverse())
    }

    /// Image of a great 3-sphere.
    ///
    /// With `x' = a x b⁻¹` and `y' = c y d⁻¹`, the graph of `x ↦ p x q⁻¹`
    /// becomes the graph of `x' ↦ (c p a⁻¹) x' (d q b⁻¹)⁻¹`.
    pub fn apply_to_sphere(&self, sphere: &GreatThreeSphere) -> GreatThreeSphere {
        let (a, b) = (self.first.left, self.first.right);
        let (c, d) = (self.second.left, self.second.right);
        GreatThreeSphere::new(c * sphere.p() * a.inverse(), d * sphere.q() * b.inverse())
    }
}

/// `q · (x, y) = (x q⁻¹, q y q⁻¹)`, the action permuting the fibers of an
/// `f_α` fibration: it carries `Σ_p` to `Σ_{qp}`.
pub fn homogeneity_action(q: UnitQuaternion) -> PairIsometry {
    PairIsometry::new(
        SphereIsometry::new(UnitQuaternion::ONE, q),
        SphereIsometry::new(q, q),
    )
}

/// `q · (x, y) = (x, q y)`, which carries the Hopf fiber `H_v` to `H_{qv}`.
pub fn hopf_action(q: UnitQuaternion) -> PairIsometry {
    PairIsometry::new(
        SphereIsometry::IDENTITY,
        SphereIsometry::left_multiplication(q),
    )
}

/// From `T₁ = (p₁, q₁)` and `T₂ = (p₂, q₂)` with `f ∘ T₁ = T₂ ∘ f`, the
/// isometry `(x, y) ↦ (q₁ x q₂⁻¹, p₁ y p₂⁻¹)`, which maps `Σ_u` onto `Σ_{T₁(u)}`.
pub fn mix_match_isometry(t1: SphereIsometry, t2: SphereIsometry) -> PairIsometry {
    PairIsometry::new(
        SphereIsometry::new(t1.right, t2.right),
        SphereIsometry::new(t1.left, t2.left),
    )
}
