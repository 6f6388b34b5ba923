//! The `verify` suite: seeded property checks across the three library layers.

use std::cell::OnceCell;
use std::f64::consts::{FRAC_PI_3, FRAC_PI_6, PI};
use std::time::Instant;

use clifford_core::descent::CompassSearch;
use clifford_core::extremal::{
    cold_pivot, diagonal_point_distance, hot_pivot, numeric_extrema, p_theta, q_double_prime,
    q_double_prime_closed_form, q_double_prime_first_order, q_prime, q_prime_closed_form,
    NumericExtrema, DEFAULT_REFINE_STEPS,
};
use clifford_core::fibration::{
    brute_force_min_distance, petro_discrepancy, pointwise_distance_stats, BRUTE_FORCE_TOL,
    PETRO_TOL,
};
use clifford_core::quaternion::{exp_axis, sample_uniform};
use clifford_core::{
    eggbeater_sweep, geodesic_distance, hot_cold_analytic, hot_cold_numeric, hot_cold_on_sigma1,
    petro_disjoint, product_distance, Fibration, GreatThreeSphere, ImaginaryUnit,
    OffsetSphereParams, UnitQuaternion,
};

use crate::config::{CliError, RunConfig};
use crate::report::{Bound, Check, VerificationReport};

/// Grids smaller than this make lattice searches meaningless.
pub const MIN_GRID: usize = 1_000;

/// Pairs closer than this to a tie are left out of the Petro comparison.
pub const NEAR_TIE: f64 = 1e-2;

const PETRO_PAIRS: usize = 100;
const HOMOGENEITY_PAIRS: usize = 100;
const OFFSET_INSTANCES: usize = 5;
const CLOSED_FORM_POINTS: usize = 50;
const FINITE_EPSILON_FRAMES: usize = 2;

type CheckFn<'a> = Box<dyn Fn() -> Result<Check, CliError> + 'a>;

pub fn run_verify(cfg: &RunConfig, timings: bool) -> Result<VerificationReport, CliError> {
    cfg.validate()?;
    let alpha = cfg.alpha();
    let fib = Fibration::f_alpha(alpha)?;
    let n = cfg.n_samples;
    let seed = cfg.seed;
    let coarse = cfg.grid_size < MIN_GRID;
    let skip_coarse = |name: &str, tol: f64| {
        Check::skipped(
            name,
            tol,
            format!(
                "grid {} is below the {MIN_GRID} points a lattice search needs",
                cfg.grid_size
            ),
        )
    };
    let skip_hopf = |name: &str, tol: f64| {
        Check::skipped(
            name,
            tol,
            "alpha = 0 gives parallel neighboring fibers".into(),
        )
    };

    // numeric extrema per random offset sphere, shared by both offset-sphere checks
    let offset_cache: OnceCell<Vec<(OffsetSphereParams, NumericExtrema)>> = OnceCell::new();
    let offset_runs = || -> Result<&Vec<(OffsetSphereParams, NumericExtrema)>, CliError> {
        if let Some(v) = offset_cache.get() {
            return Ok(v);
        }
        let runs = random_offset_params(seed.wrapping_add(7), n.min(OFFSET_INSTANCES))
            .into_iter()
            .map(|p| Ok((p, hot_cold_numeric(&p, cfg.grid_size)?)))
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(offset_cache.get_or_init(|| runs))
    };

    let mut checks: Vec<(&str, CheckFn)> = Vec::new();

    checks.push((
        "quaternion.unit_norm_drift",
        Box::new(|| {
            let mut acc = UnitQuaternion::ONE;
            let mut worst: f64 = 0.0;
            for q in sample_uniform(seed, n) {
                acc = acc * q;
                worst = worst.max((acc.norm() - 1.0).abs());
            }
            Ok(Check::measured(
                "quaternion.unit_norm_drift",
                worst,
                1e-12,
                Bound::AtMost,
                n,
            ))
        }),
    ));

    checks.push((
        "quaternion.bi_invariance",
        Box::new(|| {
            let qs = sample_uniform(seed.wrapping_add(1), 4 * n);
            let worst = qs
                .chunks(4)
                .map(|w| {
                    let d = geodesic_distance(w[0], w[1]);
                    (geodesic_distance(w[2] * w[0] * w[3], w[2] * w[1] * w[3]) - d).abs()
                })
                .fold(0.0, f64::max);
            Ok(Check::measured(
                "quaternion.bi_invariance",
                worst,
                1e-12,
                Bound::AtMost,
                n,
            ))
        }),
    ));

    checks.push((
        "quaternion.triangle_inequality",
        Box::new(|| {
            let qs = sample_uniform(seed.wrapping_add(2), 3 * n);
            let worst = qs
                .chunks(3)
                .map(|w| {
                    geodesic_distance(w[0], w[2])
                        - geodesic_distance(w[0], w[1])
                        - geodesic_distance(w[1], w[2])
                })
                .fold(0.0, f64::max);
            Ok(Check::measured(
                "quaternion.triangle_inequality",
                worst,
                1e-12,
                Bound::AtMost,
                n,
            ))
        }),
    ));

    checks.push((
        "fibration.pairwise_disjoint",
        Box::new(|| {
            let ps = sample_uniform(seed.wrapping_add(3), 2 * n);
            let overlapping = ps
                .chunks(2)
                .filter(|w| !petro_disjoint(&fib.fiber(w[0]), &fib.fiber(w[1])))
                .count();
            Ok(Check::measured(
                "fibration.pairwise_disjoint",
                overlapping as f64,
                0.0,
                Bound::AtMost,
                n,
            ))
        }),
    ));

    checks.push((
        "fibration.coverage",
        Box::new(|| {
            let pts = sample_uniform(seed.wrapping_add(4), 2 * n);
            let mut worst: f64 = 0.0;
            for w in pts.chunks(2) {
                let point = (w[0], w[1]);
                let residual = match fib.solve_fiber_through_point(point) {
                    Ok(p) => fib.fiber(p).membership_residual(point),
                    Err(clifford_core::GeometryError::NoConvergence { residual, .. }) => {
                        residual.max(1.0)
                    }
                    Err(e) => return Err(e.into()),
                };
                worst = worst.max(residual);
            }
            Ok(Check::measured(
                "fibration.coverage",
                worst,
                1e-9,
                Bound::AtMost,
                n,
            ))
        }),
    ));

    checks.push((
        "fibration.homogeneity",
        Box::new(|| {
            let m = n.min(HOMOGENEITY_PAIRS);
            let qs = sample_uniform(seed.wrapping_add(5), 2 * m);
            let worst = qs
                .chunks(2)
                .map(|w| fib.verify_fiberwise_homogeneity(w[0], w[1], 64))
                .fold(0.0, f64::max);
            Ok(Check::measured(
                "fibration.homogeneity",
                worst,
                1e-10,
                Bound::AtMost,
                m,
            ))
        }),
    ));

    checks.push((
        "fibration.neighbor_variance",
        Box::new(|| {
            let s1 = fib.fiber(UnitQuaternion::ONE);
            let s2 = fib.fiber(exp_axis(ImaginaryUnit::J, 0.3));
            let m = n.max(MIN_GRID);
            let variance = pointwise_distance_stats(&s1, &s2, m).variance;
            // Hopf fibers are parallel; any other f_α separates neighbors unevenly
            let bound = if alpha == 0.0 {
                Bound::AtMost
            } else {
                Bound::Above
            };
            Ok(Check::measured(
                "fibration.neighbor_variance",
                variance,
                1e-9,
                bound,
                m,
            ))
        }),
    ));

    checks.push((
        "fibration.petro_vs_brute_force",
        Box::new(|| {
            let name = "fibration.petro_vs_brute_force";
            if coarse {
                return Ok(skip_coarse(name, 0.0));
            }
            let pairs = petro_test_pairs(seed.wrapping_add(6), n.min(PETRO_PAIRS));
            let disagreements = pairs
                .iter()
                .filter(|(a, b)| {
                    petro_disjoint(a, b)
                        != (brute_force_min_distance(a, b, cfg.grid_size) > BRUTE_FORCE_TOL)
                })
                .count();
            Ok(Check::measured(
                name,
                disagreements as f64,
                0.0,
                Bound::AtMost,
                pairs.len(),
            ))
        }),
    ));

    checks.push((
        "extremal.offset_extremal_sets",
        Box::new(|| {
            let name = "extremal.offset_extremal_sets";
            if coarse {
                return Ok(skip_coarse(name, 2.0));
            }
            let runs = offset_runs()?;
            let mut worst: f64 = 0.0;
            for (params, ext) in runs {
                let (hot, cold) = hot_cold_analytic(params);
                let far = ext
                    .minimizers
                    .iter()
                    .map(|z| hot.distance_to(*z))
                    .chain(ext.maximizers.iter().map(|z| cold.distance_to(*z)))
                    .fold(0.0, f64::max);
                let empty = ext.minimizers.is_empty() || ext.maximizers.is_empty();
                worst = worst.max(if empty { f64::MAX } else { far / ext.spacing });
            }
            // measured in grid spacings
            Ok(Check::measured(name, worst, 2.0, Bound::AtMost, runs.len()))
        }),
    ));

    checks.push((
        "extremal.offset_extremal_values",
        Box::new(|| {
            let name = "extremal.offset_extremal_values";
            if coarse {
                return Ok(skip_coarse(name, 1e-3));
            }
            let runs = offset_runs()?;
            let mut worst: f64 = 0.0;
            for (params, ext) in runs {
                worst = worst
                    .max((ext.min_value - params.hot_value()).abs())
                    .max((ext.max_value - params.cold_value()).abs());
            }
            Ok(Check::measured(
                name,
                worst,
                1e-3,
                Bound::AtMost,
                runs.len(),
            ))
        }),
    ));

    checks.push((
        "extremal.closed_form_distance",
        Box::new(|| {
            let m = n.min(CLOSED_FORM_POINTS);
            let params = random_offset_params(seed.wrapping_add(8), m);
            let zs = sample_uniform(seed.wrapping_add(9), m);
            let search = CompassSearch::new(0.5, 400);
            let mut worst: f64 = 0.0;
            for (params, z) in params.iter().zip(zs) {
                let sphere = params.sphere();
                let closed = sphere.distance_to_point((z, z));
                let (_, brute) = search.minimize(|w| product_distance((z, z), sphere.point(w)), z);
                worst = worst.max((closed - brute).abs());
            }
            Ok(Check::measured(
                "extremal.closed_form_distance",
                worst,
                1e-3,
                Bound::AtMost,
                m,
            ))
        }),
    ));

    checks.push((
        "extremal.conjugation_identities",
        Box::new(|| {
            let mut worst: f64 = 0.0;
            let mut count = 0;
            for a in 1..=10 {
                for e in 1..=10 {
                    for t in 0..10 {
                        let (al, ep, th) = (
                            FRAC_PI_6 * a as f64 / 10.0,
                            0.05 * e as f64,
                            0.2 * PI * t as f64,
                        );
                        worst = worst
                            .max(geodesic_distance(
                                q_prime(al, ep, th),
                                q_prime_closed_form(al, ep, th),
                            ))
                            .max(geodesic_distance(
                                q_double_prime(al, ep, th),
                                q_double_prime_closed_form(al, ep, th),
                            ));
                        count += 1;
                    }
                }
            }
            Ok(Check::measured(
                "extremal.conjugation_identities",
                worst,
                1e-12,
                Bound::AtMost,
                count,
            ))
        }),
    ));

    checks.push((
        "extremal.first_order_scaling",
        Box::new(|| {
            let name = "extremal.first_order_scaling";
            if alpha == 0.0 {
                return Ok(skip_hopf(name, 0.05));
            }
            let err = |eps: f64, theta: f64| {
                geodesic_distance(
                    q_double_prime(alpha, eps, theta),
                    q_double_prime_first_order(alpha, eps, theta),
                )
            };
            let mut worst: f64 = 0.0;
            for theta in [0.0, FRAC_PI_3, 0.5 * PI] {
                for eps in [0.1, 0.05] {
                    worst = worst.max((err(eps / 2.0, theta) / err(eps, theta) - 0.25).abs());
                }
            }
            Ok(Check::measured(name, worst, 0.05, Bound::AtMost, 6))
        }),
    ));

    checks.push((
        "extremal.pivots",
        Box::new(|| {
            let name = "extremal.pivots";
            if alpha == 0.0 {
                return Ok(skip_hopf(name, 1e-9));
            }
            let frames = eggbeater_sweep(alpha, cfg.epsilon, cfg.n_frames)?;
            let (h, c) = (hot_pivot(alpha), cold_pivot(alpha));
            let worst = frames
                .iter()
                .flat_map(|f| {
                    [
                        f.hot.distance_to(h),
                        f.hot.distance_to(-h),
                        f.cold.distance_to(c),
                        f.cold.distance_to(-c),
                    ]
                })
                .fold(0.0, f64::max);
            Ok(Check::measured(
                name,
                worst,
                1e-9,
                Bound::AtMost,
                frames.len(),
            ))
        }),
    ));

    checks.push((
        "extremal.hot_cold_orthogonal",
        Box::new(|| {
            let name = "extremal.hot_cold_orthogonal";
            if alpha == 0.0 {
                return Ok(skip_hopf(name, 1e-9));
            }
            let frames = eggbeater_sweep(alpha, cfg.epsilon, cfg.n_frames)?;
            let worst = frames
                .iter()
                .map(|f| f.hot.orthogonality_defect(&f.cold))
                .fold(0.0, f64::max);
            Ok(Check::measured(
                name,
                worst,
                1e-9,
                Bound::AtMost,
                frames.len(),
            ))
        }),
    ));

    checks.push((
        "extremal.finite_epsilon_hot_set",
        Box::new(|| {
            let name = "extremal.finite_epsilon_hot_set";
            if alpha == 0.0 {
                return Ok(skip_hopf(name, 1e-2));
            }
            if coarse {
                return Ok(skip_coarse(name, 1e-2));
            }
            let m = cfg.n_frames.min(FINITE_EPSILON_FRAMES);
            let mut worst: f64 = 0.0;
            for k in 0..m {
                let theta = std::f64::consts::TAU * k as f64 / cfg.n_frames as f64;
                worst = worst.max(finite_epsilon_hot_gap(
                    &fib,
                    cfg.epsilon,
                    theta,
                    cfg.grid_size,
                )?);
            }
            Ok(Check::measured(name, worst, 1e-2, Bound::AtMost, m))
        }),
    ));

    let mut results = Vec::with_capacity(checks.len());
    for (_, check) in &checks {
        let start = Instant::now();
        let c = check()?;
        results.push(if timings {
            c.with_duration(start.elapsed())
        } else {
            c
        });
    }
    Ok(VerificationReport::new(cfg.clone(), results))
}

/// Half independent random pairs, half pairs built to intersect:
/// `(p₁ r, q₁ u r u⁻¹)` has `d(p₁,p₂) = d(q₁,q₂)`. Random pairs within
/// [`NEAR_TIE`] of a tie are dropped.
pub fn petro_test_pairs(seed: u64, n: usize) -> Vec<(GreatThreeSphere, GreatThreeSphere)> {
    let qs = sample_uniform(seed, 4 * n);
    qs.chunks(4)
        .enumerate()
        .filter_map(|(k, w)| {
            let a = GreatThreeSphere::new(w[0], w[1]);
            let b = if k % 2 == 0 {
                GreatThreeSphere::new(w[2], w[3])
            } else {
                let (r, u) = (w[2], w[3]);
                GreatThreeSphere::new(w[0] * r, w[1] * u * r * u.inverse())
            };
            let disc = petro_discrepancy(&a, &b);
            (disc <= PETRO_TOL || disc >= NEAR_TIE).then_some((a, b))
        })
        .collect()
}

/// Seeded `(axis, θ, φ)` with `0 < φ < θ < π`, kept a little away from the
/// boundary so the extremal circles are well separated.
pub fn random_offset_params(seed: u64, n: usize) -> Vec<OffsetSphereParams> {
    sample_uniform(seed, 2 * n)
        .chunks(2)
        .map(|w| {
            let axis = ImaginaryUnit::new(w[0].x(), w[0].y(), w[0].z()).unwrap_or(ImaginaryUnit::I);
            // map two coordinates of a uniform quaternion into (0, 1)
            let (u, v) = (0.5 * (w[1].w() + 1.0), 0.5 * (w[1].x() + 1.0));
            let theta = 0.1 + (PI - 0.2) * u.clamp(0.0, 1.0);
            let phi = theta * (0.05 + 0.9 * v.clamp(0.0, 1.0));
            OffsetSphereParams::new(axis, theta, phi).expect("angles are ordered")
        })
        .collect()
}

/// Largest distance from a numerically found closest point on `Σ₁` (relative
/// to `Σ_{p(θ)}` at finite `ε`) to the limit hot circle.
pub fn finite_epsilon_hot_gap(
    fib: &Fibration<clifford_core::fibration::FAlpha>,
    epsilon: f64,
    theta: f64,
    grid_size: usize,
) -> Result<f64, CliError> {
    let s1 = fib.fiber(UnitQuaternion::ONE);
    let s2 = fib.fiber(p_theta(epsilon, theta));
    let (r, s) = s1.relative_pair(&s2);
    let ext = numeric_extrema(
        |z| diagonal_point_distance(z, r, s),
        grid_size,
        DEFAULT_REFINE_STEPS,
    )?;
    let frame = hot_cold_on_sigma1(fib.alpha(), epsilon, theta)?;
    if ext.minimizers.is_empty() {
        return Ok(f64::MAX);
    }
    Ok(ext
        .minimizers
        .iter()
        .map(|z| frame.hot.distance_to(*z))
        .fold(0.0, f64::max))
}
