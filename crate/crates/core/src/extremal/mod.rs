//! Closest and furthest great circles ("hot" and "cold" sets) between
//! disjoint great 3-spheres.
//!
//! Everything is reduced to the diagonal `△ = {(z, z)}` facing a sphere
//! `{(y, r y s⁻¹)}`. The distance from `(z, z)` to that sphere is
//! `d(z, r⁻¹ z s)/√2 = d(z⁻¹ r z, s)/√2`, and `z⁻¹ r z` ranges over the
//! 2-sphere of points at distance `d(1, r)` from 1, so the extremes are
//! reached where `z⁻¹ a_r z = ±a_s` for the axes `a_r`, `a_s` of `r`, `s`.

mod eggbeater;
mod numeric;

pub use eggbeater::{
    cold_pivot, eggbeater_sweep, hot_cold_on_sigma1, hot_pivot, p_theta, q_double_prime,
    q_double_prime_closed_form, q_double_prime_first_order, q_prime, q_prime_closed_form,
    sigma1_reduction, HotColdFrame,
};
pub use numeric::{hot_cold_numeric, numeric_extrema, NumericExtrema, DEFAULT_REFINE_STEPS};

use std::f64::consts::{FRAC_1_SQRT_2, PI, TAU};

use crate::error::{GeometryError, Result};
use crate::fibration::{
    petro_discrepancy, GreatThreeSphere, PairIsometry, SphereIsometry, PETRO_TOL,
};
use crate::quaternion::{exp_axis, geodesic_distance, GreatCircle, ImaginaryUnit, UnitQuaternion};

/// Angles within this of 0 or π make a relative rotation count as ±1.
const AXIS_TOL: f64 = 1e-9;

/// The sphere `{(y, e^{aθ} y e^{−aφ})}` with `0 < φ < θ < π`, placed
/// conveniently relative to the diagonal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OffsetSphereParams {
    axis: ImaginaryUnit,
    theta: f64,
    phi: f64,
}

impl OffsetSphereParams {
    pub fn new(axis: ImaginaryUnit, theta: f64, phi: f64) -> Result<Self> {
        if !(0.0 < phi && phi < theta && theta < PI) {
            return Err(GeometryError::InvalidOffsetAngles { theta, phi });
        }
        Ok(Self { axis, theta, phi })
    }

    pub fn axis(&self) -> ImaginaryUnit {
        self.axis
    }
    pub fn theta(&self) -> f64 {
        self.theta
    }
    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn sphere(&self) -> GreatThreeSphere {
        GreatThreeSphere::new(
            exp_axis(self.axis, self.theta),
            exp_axis(self.axis, self.phi),
        )
    }

    /// Distance from the hot circle: `(θ − φ)/√2`.
    pub fn hot_value(&self) -> f64 {
        FRAC_1_SQRT_2 * (self.theta - self.phi)
    }

    /// Distance from the cold circle: `d(e^{−aθ}, e^{aφ})/√2`, which wraps
    /// past the antipode when `θ + φ > π`.
    pub fn cold_value(&self) -> f64 {
        let s = self.theta + self.phi;
        FRAC_1_SQRT_2 * s.min(TAU - s)
    }
}

/// Distance in S³×S³ from `(z, z)` to `{(y, r y s⁻¹)}`.
pub fn diagonal_point_distance(z: UnitQuaternion, r: UnitQuaternion, s: UnitQuaternion) -> f64 {
    FRAC_1_SQRT_2 * geodesic_distance(z, r.inverse() * z * s)
}

/// `d(z, e^{−aθ} z e^{aφ})/√2`, the distance from `(z, z)` to the offset sphere.
pub fn point_to_diagonal_offset_distance(z: UnitQuaternion, params: &OffsetSphereParams) -> f64 {
    diagonal_point_distance(
        z,
        exp_axis(params.axis, params.theta),
        exp_axis(params.axis, params.phi),
    )
}

/// `z⁻¹ e^{aθ} z`; always at distance `θ` from 1.
pub fn conjugation_orbit_point(
    z: UnitQuaternion,
    theta: f64,
    axis: ImaginaryUnit,
) -> UnitQuaternion {
    z.inverse() * exp_axis(axis, theta) * z
}

/// Hot circle through 1 and the axis; cold circle through the other two
/// members of a positive orthonormal basis `(axis, u, v)`.
pub fn hot_cold_analytic(params: &OffsetSphereParams) -> (GreatCircle, GreatCircle) {
    let (u, v) = params.axis.orthonormal_completion();
    let hot = GreatCircle::new(UnitQuaternion::ONE, params.axis.as_quaternion())
        .expect("1 is orthogonal to imaginary units");
    let cold =
        GreatCircle::new(u.as_quaternion(), v.as_quaternion()).expect("completion is orthonormal");
    (hot, cold)
}

/// The great circle `{z : a z = z b}`, i.e. `z⁻¹ a z = b`, for unit imaginary
/// `a`, `b`.
///
/// `z ↦ (z − a z b)/2` projects R⁴ onto that plane; projecting the standard
/// basis and orthonormalizing the two largest images gives a stable basis
/// even when `b ≈ −a`.
pub fn conjugating_circle(a: ImaginaryUnit, b: ImaginaryUnit) -> GreatCircle {
    let (a, b) = (a.as_quaternion(), b.as_quaternion());
    let project = |e: [f64; 4]| -> [f64; 4] {
        let azb = raw_mul(raw_mul(a.to_array(), e), b.to_array());
        std::array::from_fn(|k| 0.5 * (e[k] - azb[k]))
    };
    let mut images: Vec<[f64; 4]> = (0..4)
        .map(|k| {
            let mut e = [0.0; 4];
            e[k] = 1.0;
            project(e)
        })
        .collect();
    images.sort_by(|x, y| dot(*y, *y).total_cmp(&dot(*x, *x)));
    let first = UnitQuaternion::normalized(images[0]);
    let second = images[1..]
        .iter()
        .map(|v| {
            let c = dot(*v, first.to_array());
            let f = first.to_array();
            std::array::from_fn::<f64, 4, _>(|k| v[k] - c * f[k])
        })
        .max_by(|x, y| dot(*x, *x).total_cmp(&dot(*y, *y)))
        .expect("four basis images");
    GreatCircle::new(first, UnitQuaternion::normalized(second)).expect("orthogonalized")
}

/// Hot and cold circles of `△` relative to `{(y, r y s⁻¹)}`, in the `z`
/// coordinate of `(z, z)`.
///
/// For `r = cos A + a_r sin A` and `s = cos B + a_s sin B` with `A, B ∈ (0, π)`,
/// the distance is smallest where `z⁻¹ a_r z = a_s` and largest where
/// `z⁻¹ a_r z = −a_s`. If `r` or `s` is ±1 the distance is constant and
/// [`GeometryError::Parallel`] is returned.
pub fn extremal_circles(
    r: UnitQuaternion,
    s: UnitQuaternion,
) -> Result<(GreatCircle, GreatCircle)> {
    let (ar, angle_r) = r.axis_angle();
    let (as_, angle_s) = s.axis_angle();
    let degenerate = |t: f64| !(AXIS_TOL..=PI - AXIS_TOL).contains(&t);
    match (ar, as_) {
        (Some(ar), Some(as_)) if !degenerate(angle_r) && !degenerate(angle_s) => Ok((
            conjugating_circle(ar, as_),
            conjugating_circle(ar, as_.neg()),
        )),
        _ => Err(GeometryError::Parallel),
    }
}

/// Hot and cold circles on `s1` relative to `s2`, projected to the first factor.
pub fn hot_cold_between(
    s1: &GreatThreeSphere,
    s2: &GreatThreeSphere,
) -> Result<(GreatCircle, GreatCircle)> {
    let discrepancy = petro_discrepancy(s1, s2);
    if discrepancy <= PETRO_TOL {
        return Err(GeometryError::IntersectingSpheres { discrepancy });
    }
    // (x, y) ↦ (x, p₁⁻¹ y q₁) leaves the first factor alone
    let (r, s) = s1.relative_pair(s2);
    extremal_circles(r, s)
}

/// Where the second sphere ends up once the first is moved to the diagonal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Placement {
    /// `d(1, r) > d(1, s)`: the convenient form `{(y, e^{aθ} y e^{−aφ})}`.
    Offset(OffsetSphereParams),
    /// `d(1, r) < d(1, s)`; the same axis alignment applies but the angles
    /// are in the opposite order.
    Reversed {
        axis: ImaginaryUnit,
        theta: f64,
        phi: f64,
    },
    /// `r` or `s` is ±1: the spheres are parallel.
    Parallel {
        r: UnitQuaternion,
        s: UnitQuaternion,
    },
}

/// Result of [`reduce_to_diagonal`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Reduction {
    /// Takes the first sphere to `△` and the second to the placed sphere.
    pub isometry: PairIsometry,
    pub placement: Placement,
}

/// Moves `s1` to the diagonal and `s2` to a common-axis position.
///
/// First `(x, y) ↦ (x, p₁⁻¹ y q₁)` gives `△` and `{(y, r y s⁻¹)}`. The
/// diagonal conjugation `(x, y) ↦ (x v⁻¹, y v⁻¹)` fixes `△` and replaces `s`
/// by `v s v⁻¹`, so choosing `v` with `v a_s v⁻¹ = a_r` puts both rotations
/// on the axis of `r`.
pub fn reduce_to_diagonal(s1: &GreatThreeSphere, s2: &GreatThreeSphere) -> Result<Reduction> {
    let discrepancy = petro_discrepancy(s1, s2);
    if discrepancy <= PETRO_TOL {
        return Err(GeometryError::IntersectingSpheres { discrepancy });
    }
    let to_diagonal = PairIsometry::new(
        SphereIsometry::IDENTITY,
        SphereIsometry::new(s1.p().inverse(), s1.q().inverse()),
    );
    let (r, s) = s1.relative_pair(s2);
    let (ar, theta) = r.axis_angle();
    let (as_, phi) = s.axis_angle();
    let degenerate = |t: f64| !(AXIS_TOL..=PI - AXIS_TOL).contains(&t);
    let (ar, as_) = match (ar, as_) {
        (Some(ar), Some(as_)) if !degenerate(theta) && !degenerate(phi) => (ar, as_),
        _ => {
            return Ok(Reduction {
                isometry: to_diagonal,
                placement: Placement::Parallel { r, s },
            })
        }
    };
    // v = z with z⁻¹ a_r z = a_s, so that v a_s v⁻¹ = a_r
    let v = conjugating_circle(ar, as_).a();
    let align = PairIsometry::new(
        SphereIsometry::right_multiplication(v.inverse()),
        SphereIsometry::right_multiplication(v.inverse()),
    );
    let isometry = align.compose(&to_diagonal);
    let placement = if theta > phi {
        Placement::Offset(OffsetSphereParams::new(ar, theta, phi)?)
    } else {
        Placement::Reversed {
            axis: ar,
            theta,
            phi,
        }
    };
    Ok(Reduction {
        isometry,
        placement,
    })
}

fn raw_mul(p: [f64; 4], q: [f64; 4]) -> [f64; 4] {
    let [a, b, c, d] = p;
    let [e, f, g, h] = q;
    [
        a * e - b * f - c * g - d * h,
        a * f + b * e + c * h - d * g,
        a * g - b * h + c * e + d * f,
        a * h + b * g - c * f + d * e,
    ]
}

fn dot(a: [f64; 4], b: [f64; 4]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::sample_uniform;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_6};

    fn params(axis: ImaginaryUnit) -> OffsetSphereParams {
        OffsetSphereParams::new(axis, FRAC_PI_3, FRAC_PI_6).unwrap()
    }

    #[test]
    fn parameter_ordering() {
        assert!(OffsetSphereParams::new(ImaginaryUnit::I, 0.5, 0.5).is_err());
        assert!(OffsetSphereParams::new(ImaginaryUnit::I, 0.4, 0.5).is_err());
        assert!(OffsetSphereParams::new(ImaginaryUnit::I, PI, 0.5).is_err());
        assert!(OffsetSphereParams::new(ImaginaryUnit::I, 0.5, 0.0).is_err());
    }

    #[test]
    fn offset_distance_examples() {
        let p = params(ImaginaryUnit::I);
        let d1 = point_to_diagonal_offset_distance(UnitQuaternion::ONE, &p);
        assert!((d1 - FRAC_1_SQRT_2 * FRAC_PI_6).abs() < 1e-15);
        let dj = point_to_diagonal_offset_distance(UnitQuaternion::J, &p);
        assert!((dj - FRAC_1_SQRT_2 * FRAC_PI_2).abs() < 1e-15);
        for t in [0.0, 0.4, 1.7, 3.0, 5.5] {
            let z = exp_axis(ImaginaryUnit::I, t);
            let d = point_to_diagonal_offset_distance(z, &p);
            assert!((d - p.hot_value()).abs() < 1e-14);
        }
    }

    #[test]
    fn orbit_examples() {
        let th = 0.9;
        let orbit = conjugation_orbit_point(UnitQuaternion::ONE, th, ImaginaryUnit::K);
        assert!(geodesic_distance(orbit, exp_axis(ImaginaryUnit::K, th)) < 1e-15);
        let orbit = conjugation_orbit_point(UnitQuaternion::J, th, ImaginaryUnit::I);
        assert!(geodesic_distance(orbit, exp_axis(ImaginaryUnit::I, -th)) < 1e-15);
        let orbit = conjugation_orbit_point(exp_axis(ImaginaryUnit::I, 0.3), th, ImaginaryUnit::I);
        assert!(geodesic_distance(orbit, exp_axis(ImaginaryUnit::I, th)) < 1e-15);
    }

    #[test]
    fn analytic_circles_for_basis_axes() {
        let (hot, cold) = hot_cold_analytic(&params(ImaginaryUnit::I));
        assert!(hot.contains(UnitQuaternion::ONE, 1e-15) && hot.contains(UnitQuaternion::I, 1e-15));
        assert!(cold.contains(UnitQuaternion::J, 1e-15) && cold.contains(UnitQuaternion::K, 1e-15));

        let (hot, cold) = hot_cold_analytic(&params(ImaginaryUnit::K));
        assert!(hot.contains(UnitQuaternion::K, 1e-15));
        assert!(cold.contains(UnitQuaternion::I, 1e-15) && cold.contains(UnitQuaternion::J, 1e-15));

        let jt = ImaginaryUnit::j_theta(FRAC_PI_4);
        let (hot, _) = hot_cold_analytic(&params(jt));
        let diag = UnitQuaternion::new(0.0, 0.0, 1.0, 1.0).unwrap();
        assert!(hot.contains(UnitQuaternion::ONE, 1e-15) && hot.contains(diag, 1e-15));
    }

    #[test]
    fn extremal_values_on_circles() {
        for (th, ph) in [(1.0, 0.3), (2.8, 1.9), (FRAC_PI_3, FRAC_PI_6)] {
            let p = OffsetSphereParams::new(ImaginaryUnit::J, th, ph).unwrap();
            let (hot, cold) = hot_cold_analytic(&p);
            for z in hot.sample(9) {
                assert!((point_to_diagonal_offset_distance(z, &p) - p.hot_value()).abs() < 1e-13);
            }
            for z in cold.sample(9) {
                assert!((point_to_diagonal_offset_distance(z, &p) - p.cold_value()).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn conjugating_circles_solve_the_equation() {
        let units: Vec<ImaginaryUnit> = sample_uniform(5, 6)
            .into_iter()
            .map(|q| ImaginaryUnit::new(q.x(), q.y(), q.z()).unwrap())
            .collect();
        let pairs = [
            (units[0], units[1]),
            (units[2], units[2]),
            (units[3], units[3].neg()),
            (
                units[4],
                ImaginaryUnit::new(
                    -units[4].vector()[0] + 1e-7,
                    -units[4].vector()[1],
                    -units[4].vector()[2],
                )
                .unwrap(),
            ),
        ];
        for (a, b) in pairs {
            let circle = conjugating_circle(a, b);
            for z in circle.sample(7) {
                let got = z.inverse() * a.as_quaternion() * z;
                assert!(geodesic_distance(got, b.as_quaternion()) < 1e-12);
            }
        }
    }

    #[test]
    fn general_circles_agree_with_analytic_ones() {
        let p = OffsetSphereParams::new(ImaginaryUnit::J, 1.2, 0.4).unwrap();
        let (hot, cold) = hot_cold_analytic(&p);
        let (h2, c2) =
            extremal_circles(exp_axis(p.axis(), p.theta()), exp_axis(p.axis(), p.phi())).unwrap();
        assert!(hot.same_as(&h2, 1e-12) && cold.same_as(&c2, 1e-12));
        assert_eq!(
            extremal_circles(UnitQuaternion::J, UnitQuaternion::ONE),
            Err(GeometryError::Parallel)
        );
    }

    #[test]
    fn reduction_of_the_diagonal_is_trivial() {
        let s2 = params(ImaginaryUnit::I).sphere();
        let red = reduce_to_diagonal(&GreatThreeSphere::diagonal(), &s2).unwrap();
        for x in sample_uniform(2, 10) {
            let pt = (x, x);
            let img = red.isometry.apply(pt);
            assert!(geodesic_distance(img.0, img.1) < 1e-14);
        }
        match red.placement {
            Placement::Offset(p) => {
                assert!(
                    (p.theta() - FRAC_PI_3).abs() < 1e-14 && (p.phi() - FRAC_PI_6).abs() < 1e-14
                )
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn reduction_of_random_pairs() {
        let qs = sample_uniform(44, 40);
        for w in qs.chunks(4) {
            let s1 = GreatThreeSphere::new(w[0], w[1]);
            let s2 = GreatThreeSphere::new(w[2], w[3]);
            let red = reduce_to_diagonal(&s1, &s2).unwrap();
            let image1 = red.isometry.apply_to_sphere(&s1);
            let image2 = red.isometry.apply_to_sphere(&s2);
            assert!(
                geodesic_distance(image1.p(), image1.q()) < 1e-12,
                "not diagonal"
            );
            for x in sample_uniform(45, 10) {
                let (a, b) = red.isometry.apply(s1.point(x));
                assert!(geodesic_distance(a, b) < 1e-10);
            }
            let (theta, phi, axis) = match red.placement {
                Placement::Offset(p) => (p.theta(), p.phi(), p.axis()),
                Placement::Reversed { axis, theta, phi } => (theta, phi, axis),
                Placement::Parallel { .. } => panic!("random pair reported parallel"),
            };
            let expected = GreatThreeSphere::new(exp_axis(axis, theta), exp_axis(axis, phi));
            assert!(geodesic_distance(image2.p(), expected.p()) < 1e-10);
            assert!(geodesic_distance(image2.q(), expected.q()) < 1e-10);
        }
    }

    #[test]
    fn reduction_rejects_intersecting_spheres() {
        let ij = GreatThreeSphere::new(UnitQuaternion::I, UnitQuaternion::J);
        assert!(matches!(
            reduce_to_diagonal(&GreatThreeSphere::diagonal(), &ij),
            Err(GeometryError::IntersectingSpheres { .. })
        ));
    }
}
