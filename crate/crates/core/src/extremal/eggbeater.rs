//! Hot and cold circles on the fiber `Σ₁` of the `f_α` fibration relative to
//! a neighboring fiber `Σ_{p(θ)}`, `p(θ) = e^{j_θ ε}`, and their motion as
//! `θ` turns.
//!
//! `T = (x, y e^{iα})` carries `Σ₁` to the diagonal and `Σ_{p(θ)}` to
//! `{(x, p x q′)}`; `T′ = (x e^{iβ}, y e^{iβ})` with `β = (π/2 − α)/2` fixes
//! the diagonal and replaces `q′` by `q″ = e^{−iβ} q′ e^{iβ} ≈ e^{2ε sin α j_θ}`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, FRAC_PI_6, TAU};

use rayon::prelude::*;

use super::extremal_circles;
use crate::error::{GeometryError, Result};
use crate::fibration::{PairIsometry, SphereIsometry};
use crate::quaternion::{exp_axis, geodesic_distance, GreatCircle, ImaginaryUnit, UnitQuaternion};

/// `e^{j_θ ε}`, the neighbor of 1 in direction `θ`.
pub fn p_theta(epsilon: f64, theta: f64) -> UnitQuaternion {
    exp_axis(ImaginaryUnit::j_theta(theta), epsilon)
}

/// `e^{j_θ ε} e^{−iα} e^{−j_θ ε} e^{iα}`.
pub fn q_prime(alpha: f64, epsilon: f64, theta: f64) -> UnitQuaternion {
    let jt = ImaginaryUnit::j_theta(theta);
    exp_axis(jt, epsilon)
        * exp_axis(ImaginaryUnit::I, -alpha)
        * exp_axis(jt, -epsilon)
        * exp_axis(ImaginaryUnit::I, alpha)
}

/// Expanded form of [`q_prime`]: `(cos²ε + sin²ε cos 2α) + (sin²ε sin 2α) i
/// + 2 cos ε sin ε sin α · j_{θ−α+π/2}`.
pub fn q_prime_closed_form(alpha: f64, epsilon: f64, theta: f64) -> UnitQuaternion {
    expansion(alpha, epsilon, theta - alpha + FRAC_PI_2)
}

fn beta(alpha: f64) -> f64 {
    0.5 * (FRAC_PI_2 - alpha)
}

/// `e^{−iβ} q′ e^{iβ}`.
pub fn q_double_prime(alpha: f64, epsilon: f64, theta: f64) -> UnitQuaternion {
    let b = beta(alpha);
    exp_axis(ImaginaryUnit::I, -b) * q_prime(alpha, epsilon, theta) * exp_axis(ImaginaryUnit::I, b)
}

/// Same expansion as [`q_prime_closed_form`] with the `jk` part along `j_θ`.
pub fn q_double_prime_closed_form(alpha: f64, epsilon: f64, theta: f64) -> UnitQuaternion {
    expansion(alpha, epsilon, theta)
}

/// `1 + 2ε sin α j_θ`, normalized.
pub fn q_double_prime_first_order(alpha: f64, epsilon: f64, theta: f64) -> UnitQuaternion {
    let c = 2.0 * epsilon * alpha.sin();
    let (s, co) = theta.sin_cos();
    UnitQuaternion::normalized([1.0, 0.0, c * co, c * s])
}

fn expansion(alpha: f64, epsilon: f64, phase: f64) -> UnitQuaternion {
    let (se, ce) = epsilon.sin_cos();
    let (s2a, c2a) = (2.0 * alpha).sin_cos();
    let m = 2.0 * ce * se * alpha.sin();
    let (sp, cp) = phase.sin_cos();
    UnitQuaternion::normalized([ce * ce + se * se * c2a, se * se * s2a, m * cp, m * sp])
}

/// `T′ ∘ T`, taking `Σ₁` to the diagonal and `Σ_{p(θ)}` to `{(x, p x q″)}`.
pub fn sigma1_reduction(alpha: f64) -> PairIsometry {
    let t = PairIsometry::new(
        SphereIsometry::IDENTITY,
        SphereIsometry::right_multiplication(exp_axis(ImaginaryUnit::I, alpha)),
    );
    let eb = SphereIsometry::right_multiplication(exp_axis(ImaginaryUnit::I, beta(alpha)));
    PairIsometry::new(eb, eb).compose(&t)
}

/// `e^{i(α/2 − π/4)}`, the point shared by every cold circle on `Σ₁`.
pub fn cold_pivot(alpha: f64) -> UnitQuaternion {
    exp_axis(ImaginaryUnit::I, 0.5 * alpha - FRAC_PI_4)
}

/// `i·e^{i(α/2 − π/4)}`, the point shared by every hot circle on `Σ₁`.
pub fn hot_pivot(alpha: f64) -> UnitQuaternion {
    UnitQuaternion::I * cold_pivot(alpha)
}

/// One step of the sweep: circles on `Σ₁` (first-factor coordinate) closest
/// to and furthest from `Σ_{p(θ)}` as `ε → 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HotColdFrame {
    pub theta: f64,
    pub hot: GreatCircle,
    pub cold: GreatCircle,
    pub q_exact: UnitQuaternion,
    pub q_first_order: UnitQuaternion,
}

impl HotColdFrame {
    /// `d(q″, 1 + 2ε sin α j_θ)`, which is `O(ε²)`.
    pub fn approx_error(&self) -> f64 {
        geodesic_distance(self.q_exact, self.q_first_order)
    }
}

/// Limit hot and cold circles on `Σ₁` for direction `θ`; `ε` only affects
/// the reported `q″` pair.
///
/// In the reduced frame the neighbor is `{(y, r y s⁻¹)}` with `r = e^{j_θ ε}`
/// and `s⁻¹ ≈ e^{2ε sin α j_θ}`, so the axes are `j_θ` and `−j_θ`.
pub fn hot_cold_on_sigma1(alpha: f64, epsilon: f64, theta: f64) -> Result<HotColdFrame> {
    if !(alpha > 0.0 && alpha <= FRAC_PI_6 + 1e-15) {
        return Err(GeometryError::AlphaOutOfRange(alpha));
    }
    if !(epsilon > 0.0 && epsilon < FRAC_PI_2) {
        return Err(GeometryError::InvalidArgument(format!(
            "epsilon must lie in (0, π/2), got {epsilon}"
        )));
    }
    let q_exact = q_double_prime(alpha, epsilon, theta);
    let q_first_order = q_double_prime_first_order(alpha, epsilon, theta);
    let (hot, cold) = extremal_circles(p_theta(epsilon, theta), q_first_order.inverse())?;
    // back to Σ₁: x = x′ e^{−iβ}
    let eb = exp_axis(ImaginaryUnit::I, beta(alpha));
    Ok(HotColdFrame {
        theta,
        hot: hot.map(UnitQuaternion::ONE, eb),
        cold: cold.map(UnitQuaternion::ONE, eb),
        q_exact,
        q_first_order,
    })
}

/// Frames at `θ = 2πk/n` for `k = 0..n`, in order of `k`.
pub fn eggbeater_sweep(alpha: f64, epsilon: f64, n_frames: usize) -> Result<Vec<HotColdFrame>> {
    if n_frames < 4 {
        return Err(GeometryError::InvalidArgument(format!(
            "a sweep needs at least 4 frames, got {n_frames}"
        )));
    }
    (0..n_frames)
        .into_par_iter()
        .map(|k| hot_cold_on_sigma1(alpha, epsilon, TAU * k as f64 / n_frames as f64))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{diagonal_point_distance, hot_cold_between};
    use crate::fibration::{Fibration, GreatThreeSphere};
    use std::f64::consts::{FRAC_PI_3, PI};

    const ALPHAS: [f64; 3] = [0.05, PI / 12.0, FRAC_PI_6];

    #[test]
    fn q_prime_matches_expansion() {
        for alpha in ALPHAS {
            for eps in [1e-3, 0.1, 0.7] {
                for theta in [0.0, 1.0, FRAC_PI_3, 4.0] {
                    let direct = q_prime(alpha, eps, theta);
                    assert!(
                        geodesic_distance(direct, q_prime_closed_form(alpha, eps, theta)) < 1e-12
                    );
                    let dd = q_double_prime(alpha, eps, theta);
                    assert!(
                        geodesic_distance(dd, q_double_prime_closed_form(alpha, eps, theta))
                            < 1e-12
                    );
                }
            }
        }
    }

    #[test]
    fn first_order_error_is_quadratic() {
        let e1 = geodesic_distance(
            q_double_prime(FRAC_PI_6, 1e-2, 0.3),
            q_double_prime_first_order(FRAC_PI_6, 1e-2, 0.3),
        );
        let e2 = geodesic_distance(
            q_double_prime(FRAC_PI_6, 1e-3, 0.3),
            q_double_prime_first_order(FRAC_PI_6, 1e-3, 0.3),
        );
        assert!(e1 < 1e-3 && e2 < 1e-5);
        assert!(e1 / e2 > 50.0, "{e1} {e2}");
    }

    #[test]
    fn reduction_places_the_neighbor() {
        let fib = Fibration::f_alpha(FRAC_PI_6).unwrap();
        let (eps, theta) = (0.05, 1.1);
        let u = sigma1_reduction(FRAC_PI_6);
        let s1 = u.apply_to_sphere(&fib.fiber(UnitQuaternion::ONE));
        assert!(geodesic_distance(s1.p(), s1.q()) < 1e-14);
        let s2 = u.apply_to_sphere(&fib.fiber(p_theta(eps, theta)));
        let expected = GreatThreeSphere::new(
            p_theta(eps, theta),
            q_double_prime(FRAC_PI_6, eps, theta).inverse(),
        );
        assert!(geodesic_distance(s2.p(), expected.p()) < 1e-14);
        assert!(geodesic_distance(s2.q(), expected.q()) < 1e-14);
    }

    #[test]
    fn circles_pass_through_the_pivots() {
        for alpha in ALPHAS {
            for frame in eggbeater_sweep(alpha, 1e-3, 8).unwrap() {
                for pivot in [hot_pivot(alpha), -hot_pivot(alpha)] {
                    assert!(frame.hot.contains(pivot, 1e-12));
                }
                for pivot in [cold_pivot(alpha), -cold_pivot(alpha)] {
                    assert!(frame.cold.contains(pivot, 1e-12));
                }
                assert!(frame.hot.orthogonality_defect(&frame.cold) < 1e-12);
            }
        }
    }

    #[test]
    fn limit_circles_approach_the_exact_ones() {
        let alpha = PI / 12.0;
        let fib = Fibration::f_alpha(alpha).unwrap();
        for theta in [0.0, 0.8, 2.5] {
            let limit = hot_cold_on_sigma1(alpha, 1e-3, theta).unwrap();
            let exact = hot_cold_between(
                &fib.fiber(UnitQuaternion::ONE),
                &fib.fiber(p_theta(1e-3, theta)),
            )
            .unwrap();
            for z in exact.0.sample(8) {
                assert!(limit.hot.distance_to(z) < 1e-2);
            }
            for z in exact.1.sample(8) {
                assert!(limit.cold.distance_to(z) < 1e-2);
            }
        }
    }

    #[test]
    fn hot_circle_is_closer() {
        let alpha = PI / 12.0;
        let eps = 0.01;
        let fib = Fibration::f_alpha(alpha).unwrap();
        let s1 = fib.fiber(UnitQuaternion::ONE);
        let s2 = fib.fiber(p_theta(eps, 0.0));
        let (r, s) = s1.relative_pair(&s2);
        let frame = hot_cold_on_sigma1(alpha, eps, 0.0).unwrap();
        let hot = diagonal_point_distance(frame.hot.a(), r, s);
        let cold = diagonal_point_distance(frame.cold.a(), r, s);
        assert!(hot < cold, "{hot} {cold}");
    }

    #[test]
    fn sweep_is_ordered_and_validated() {
        let frames = eggbeater_sweep(FRAC_PI_6, 1e-3, 6).unwrap();
        for (k, f) in frames.iter().enumerate() {
            assert!((f.theta - TAU * k as f64 / 6.0).abs() < 1e-15);
        }
        assert!(eggbeater_sweep(FRAC_PI_6, 1e-3, 3).is_err());
        assert!(hot_cold_on_sigma1(0.0, 1e-3, 0.0).is_err());
        assert!(hot_cold_on_sigma1(1.0, 1e-3, 0.0).is_err());
        assert!(hot_cold_on_sigma1(0.2, 0.0, 0.0).is_err());
    }
}
