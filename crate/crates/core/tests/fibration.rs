use std::f64::consts::{FRAC_PI_6, PI};

use clifford_core::fibration::{
    brute_force_min_distance, fibers_parallel, pointwise_distance_stats, BRUTE_FORCE_TOL,
};
use clifford_core::quaternion::{exp_axis, sample_uniform};
use clifford_core::{
    hot_cold_analytic, hot_cold_numeric, petro_disjoint, reduce_to_diagonal, Fibration,
    GreatThreeSphere, ImaginaryUnit, OffsetSphereParams, Placement, UnitQuaternion,
};

#[test]
fn fibers_are_pairwise_disjoint_and_cover() {
    let fib = Fibration::f_alpha(FRAC_PI_6).unwrap();
    let ps = sample_uniform(1, 24);
    for w in ps.chunks(2) {
        let (a, b) = (fib.fiber(w[0]), fib.fiber(w[1]));
        assert!(petro_disjoint(&a, &b));
        assert!(brute_force_min_distance(&a, &b, 2_000) > BRUTE_FORCE_TOL);
    }
    for w in sample_uniform(2, 60).chunks(2) {
        let point = (w[0], w[1]);
        let p = fib.solve_fiber_through_point(point).unwrap();
        assert!(fib.fiber(p).membership_residual(point) < 1e-9);
    }
}

#[test]
fn hopf_fibers_are_parallel_and_f_alpha_fibers_are_not() {
    let hopf = Fibration::hopf();
    let fib = Fibration::f_alpha(PI / 12.0).unwrap();
    let (p1, p2) = (UnitQuaternion::ONE, exp_axis(ImaginaryUnit::J, 0.4));
    assert!(fibers_parallel(&hopf.fiber(p1), &hopf.fiber(p2), 2_000).unwrap());
    assert!(!fibers_parallel(&fib.fiber(p1), &fib.fiber(p2), 2_000).unwrap());
    let stats = pointwise_distance_stats(&fib.fiber(p1), &fib.fiber(p2), 2_000);
    assert!(stats.variance > 0.0 && stats.min < stats.max);
}

#[test]
fn reduced_neighbors_have_analytic_extremes() {
    let fib = Fibration::f_alpha(PI / 12.0).unwrap();
    let s1 = fib.fiber(UnitQuaternion::ONE);
    let s2 = fib.fiber(UnitQuaternion::new(0.6, 0.3, -0.5, 0.2).unwrap());
    let reduction = reduce_to_diagonal(&s1, &s2).unwrap();
    let params = match reduction.placement {
        Placement::Offset(p) => p,
        Placement::Reversed { axis, theta, phi } => {
            OffsetSphereParams::new(axis, phi, theta).unwrap()
        }
        Placement::Parallel { .. } => panic!("fibers reported parallel"),
    };
    let stats = pointwise_distance_stats(&s1, &s2, 5_000);
    assert!(
        (stats.min - params.hot_value()).abs() < 5e-3,
        "{} {}",
        stats.min,
        params.hot_value()
    );
    let ext = hot_cold_numeric(&params, 10_000).unwrap();
    let (hot, cold) = hot_cold_analytic(&params);
    assert!(ext
        .minimizers
        .iter()
        .all(|z| hot.distance_to(*z) <= 2.0 * ext.spacing));
    assert!(ext
        .maximizers
        .iter()
        .all(|z| cold.distance_to(*z) <= 2.0 * ext.spacing));
}

#[test]
fn non_distance_decreasing_maps_are_rejected() {
    struct Square;
    impl clifford_core::SphereMap for Square {
        fn eval(&self, p: UnitQuaternion) -> UnitQuaternion {
            p * p
        }
        fn name(&self) -> String {
            "square".into()
        }
    }
    assert!(Fibration::new(Square).is_err());
    assert!(GreatThreeSphere::diagonal().contains((UnitQuaternion::I, UnitQuaternion::I)));
}
