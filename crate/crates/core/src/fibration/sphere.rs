//! Great 3-spheres of S³×S³ as graphs of orientation-preserving isometries.

use std::f64::consts::FRAC_1_SQRT_2;

use crate::descent::CompassSearch;
use crate::error::{GeometryError, Result};
use crate::extremal::diagonal_point_distance;
use crate::quaternion::{
    canonicalize_sign, fibonacci_grid, geodesic_distance, grid_spacing, UnitQuaternion,
};

/// A point of S³×S³.
pub type ProductPoint = (UnitQuaternion, UnitQuaternion);

/// Tolerance for [`GreatThreeSphere::contains`].
pub const MEMBERSHIP_TOL: f64 = 1e-9;

/// Distance discrepancy below which the Petro criterion reports intersection.
pub const PETRO_TOL: f64 = 1e-9;

/// Threshold above which [`brute_force_min_distance`] counts spheres as disjoint.
pub const BRUTE_FORCE_TOL: f64 = 1e-3;

/// `Σ = {(x, p x q⁻¹) : x ∈ S³}`, with `(p, q)` and `(−p, −q)` identified.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GreatThreeSphere {
    p: UnitQuaternion,
    q: UnitQuaternion,
}

impl GreatThreeSphere {
    pub fn new(p: UnitQuaternion, q: UnitQuaternion) -> Self {
        let (p, q) = canonicalize_sign((p, q));
        Self { p, q }
    }

    /// The diagonal `{(x, x)}`.
    pub fn diagonal() -> Self {
        Self::new(UnitQuaternion::ONE, UnitQuaternion::ONE)
    }

    pub fn p(&self) -> UnitQuaternion {
        self.p
    }

    pub fn q(&self) -> UnitQuaternion {
        self.q
    }

    pub fn pair(&self) -> (UnitQuaternion, UnitQuaternion) {
        (self.p, self.q)
    }

    /// The graphed isometry `x ↦ p x q⁻¹`.
    pub fn graph(&self, x: UnitQuaternion) -> UnitQuaternion {
        self.p * x * self.q.inverse()
    }

    /// The point of the sphere above `x`.
    pub fn point(&self, x: UnitQuaternion) -> ProductPoint {
        (x, self.graph(x))
    }

    /// `d(y, p x q⁻¹)` for the point `(x, y)`.
    pub fn membership_residual(&self, point: ProductPoint) -> f64 {
        geodesic_distance(point.1, self.graph(point.0))
    }

    pub fn contains(&self, point: ProductPoint) -> bool {
        self.membership_residual(point) <= MEMBERSHIP_TOL
    }

    /// Product-metric distance from `point` to the sphere.
    ///
    /// `inf_w √(d(x,w)² + d(p⁻¹ y q, w)²)` is attained at the midpoint of `x`
    /// and `p⁻¹ y q`, giving `d(x, p⁻¹ y q)/√2`.
    pub fn distance_to_point(&self, point: ProductPoint) -> f64 {
        let (x, y) = point;
        FRAC_1_SQRT_2 * geodesic_distance(x, self.p.inverse() * y * self.q)
    }

    /// Position of `other` relative to `self`: the isometry
    /// `(x, y) ↦ (x, p⁻¹ y q)` takes `self` to the diagonal and `other` to
    /// `{(y, r y s⁻¹)}`; returns `(r, s)`.
    pub fn relative_pair(&self, other: &Self) -> (UnitQuaternion, UnitQuaternion) {
        (self.p.inverse() * other.p, self.q.inverse() * other.q)
    }
}

/// `√(d(x₁,x₂)² + d(y₁,y₂)²)`.
pub fn product_distance(a: ProductPoint, b: ProductPoint) -> f64 {
    geodesic_distance(a.0, b.0).hypot(geodesic_distance(a.1, b.1))
}

/// `|d(p₁,p₂) − d(q₁,q₂)|`, minimized over the representative `±(p₂, q₂)`.
pub fn petro_discrepancy(s1: &GreatThreeSphere, s2: &GreatThreeSphere) -> f64 {
    let disc = |p2: UnitQuaternion, q2: UnitQuaternion| {
        (geodesic_distance(s1.p, p2) - geodesic_distance(s1.q, q2)).abs()
    };
    disc(s2.p, s2.q).min(disc(-s2.p, -s2.q))
}

/// Two great 3-spheres are disjoint exactly when `d(p₁,p₂) ≠ d(q₁,q₂)`.
pub fn petro_disjoint(s1: &GreatThreeSphere, s2: &GreatThreeSphere) -> bool {
    petro_discrepancy(s1, s2) > PETRO_TOL
}

/// Minimum over `x` of the distance from `(x, p₁ x q₁⁻¹)` to `s2`, by a
/// `grid_size`-point lattice search refined with a compass search from the
/// best few grid points.
pub fn brute_force_min_distance(
    s1: &GreatThreeSphere,
    s2: &GreatThreeSphere,
    grid_size: usize,
) -> f64 {
    let (r, s) = s1.relative_pair(s2);
    let f = |z: UnitQuaternion| diagonal_point_distance(z, r, s);
    let grid = fibonacci_grid(grid_size.max(1));
    let mut scored: Vec<(f64, UnitQuaternion)> = grid.iter().map(|&z| (f(z), z)).collect();
    scored.sort_by(|a, b| a.0.total_cmp(&b.0));
    let search = CompassSearch::new(grid_spacing(grid_size.max(1)), 300);
    scored
        .iter()
        .take(4)
        .map(|&(_, z)| search.minimize(f, z).1)
        .fold(f64::INFINITY, f64::min)
}

/// Summary of `x ↦ d((x, p₁ x q₁⁻¹), Σ₂)` over a sample set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointwiseStats {
    pub min: f64,
    pub max: f64,
    pub mean: f64,
    pub variance: f64,
    pub samples: usize,
}

impl PointwiseStats {
    pub fn spread(&self) -> f64 {
        self.max - self.min
    }
}

/// Statistics of the pointwise distance from `s1` to `s2` over an
/// `n_samples`-point lattice.
pub fn pointwise_distance_stats(
    s1: &GreatThreeSphere,
    s2: &GreatThreeSphere,
    n_samples: usize,
) -> PointwiseStats {
    let values: Vec<f64> = fibonacci_grid(n_samples.max(1))
        .into_iter()
        .map(|x| s2.distance_to_point(s1.point(x)))
        .collect();
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let variance = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
    PointwiseStats {
        min: values.iter().copied().fold(f64::INFINITY, f64::min),
        max: values.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        mean,
        variance,
        samples: values.len(),
    }
}

/// Disjoint spheres are parallel when the pointwise distance is constant
/// (spread ≤ 1e-9 over the samples).
pub fn fibers_parallel(
    s1: &GreatThreeSphere,
    s2: &GreatThreeSphere,
    n_samples: usize,
) -> Result<bool> {
    let discrepancy = petro_discrepancy(s1, s2);
    if discrepancy <= PETRO_TOL {
        return Err(GeometryError::IntersectingSpheres { discrepancy });
    }
    Ok(pointwise_distance_stats(s1, s2, n_samples).spread() <= 1e-9)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::{exp_axis, sample_uniform, ImaginaryUnit};
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_6};

    #[test]
    fn canonical_storage() {
        let s = GreatThreeSphere::new(-UnitQuaternion::ONE, -UnitQuaternion::I);
        assert_eq!(s.pair(), (UnitQuaternion::ONE, UnitQuaternion::I));
    }

    #[test]
    fn membership() {
        let diag = GreatThreeSphere::diagonal();
        for z in sample_uniform(1, 20) {
            assert!(diag.contains((z, z)));
        }
        assert!(!diag.contains((UnitQuaternion::ONE, UnitQuaternion::I)));

        let sigma1 =
            GreatThreeSphere::new(UnitQuaternion::ONE, exp_axis(ImaginaryUnit::I, FRAC_PI_6));
        assert!(sigma1.contains((UnitQuaternion::ONE, exp_axis(ImaginaryUnit::I, -FRAC_PI_6))));
    }

    #[test]
    fn distance_to_point_matches_minimization() {
        let s = GreatThreeSphere::new(
            UnitQuaternion::new(0.3, 0.1, -0.8, 0.2).unwrap(),
            UnitQuaternion::new(-0.5, 0.4, 0.1, 0.7).unwrap(),
        );
        let search = CompassSearch::new(0.3, 2000);
        for pt in sample_uniform(9, 6).chunks(2) {
            let point = (pt[0], pt[1]);
            let (_, brute) = search.minimize(|w| product_distance(point, s.point(w)), pt[0]);
            let closed = s.distance_to_point(point);
            assert!((brute - closed).abs() < 1e-6, "{brute} vs {closed}");
        }
    }

    #[test]
    fn petro_examples() {
        let diag = GreatThreeSphere::diagonal();
        let i1 = GreatThreeSphere::new(UnitQuaternion::I, UnitQuaternion::ONE);
        let ij = GreatThreeSphere::new(UnitQuaternion::I, UnitQuaternion::J);
        assert!(petro_disjoint(&diag, &i1));
        assert!(!petro_disjoint(&diag, &ij));
    }

    #[test]
    fn sign_flip_does_not_change_the_criterion() {
        for w in sample_uniform(4, 40).chunks(4) {
            let a = GreatThreeSphere::new(w[0], w[1]);
            let b = GreatThreeSphere::new(w[2], w[3]);
            let flipped = GreatThreeSphere { p: -b.p, q: -b.q };
            assert!((petro_discrepancy(&a, &b) - petro_discrepancy(&a, &flipped)).abs() < 1e-14);
        }
    }

    #[test]
    fn brute_force_examples() {
        let diag = GreatThreeSphere::diagonal();
        assert!(brute_force_min_distance(&diag, &diag, 1000) < 1e-9);
        let i1 = GreatThreeSphere::new(UnitQuaternion::I, UnitQuaternion::ONE);
        let d = brute_force_min_distance(&diag, &i1, 1000);
        assert!((d - FRAC_1_SQRT_2 * FRAC_PI_2).abs() < 1e-9, "{d}");
        let ij = GreatThreeSphere::new(UnitQuaternion::I, UnitQuaternion::J);
        assert!(brute_force_min_distance(&diag, &ij, 1000) < 1e-3);
    }

    #[test]
    fn intersecting_spheres_are_rejected_by_parallel_test() {
        let diag = GreatThreeSphere::diagonal();
        let ij = GreatThreeSphere::new(UnitQuaternion::I, UnitQuaternion::J);
        assert!(matches!(
            fibers_parallel(&diag, &ij, 100),
            Err(GeometryError::IntersectingSpheres { .. })
        ));
    }
}
