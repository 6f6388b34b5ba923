//! Fibrations of S³×S³ by great 3-spheres `Σ_p = {(x, p x f(p)⁻¹)}` indexed by
//! `p ∈ S³`, for a distance-decreasing map `f`.

mod isometry;
mod maps;
mod sphere;

pub use isometry::{
    homogeneity_action, hopf_action, mix_match_isometry, PairIsometry, SphereIsometry,
};
pub use maps::{
    f_alpha, f_alpha_via_hopf, hopf_map, lipschitz_estimate, pointwise_homogeneity_check,
    ConstantMap, FAlpha, SphereMap,
};
pub use sphere::{
    brute_force_min_distance, fibers_parallel, petro_discrepancy, petro_disjoint,
    pointwise_distance_stats, product_distance, GreatThreeSphere, PointwiseStats, ProductPoint,
    BRUTE_FORCE_TOL, MEMBERSHIP_TOL, PETRO_TOL,
};

use crate::error::{GeometryError, Result};
use crate::quaternion::{fibonacci_grid, geodesic_distance, UnitQuaternion};

/// Pairs sampled by [`Fibration::new`] to check that the map is distance-decreasing.
pub const VALIDATION_PAIRS: usize = 2_000;

/// Iteration cap for [`Fibration::solve_fiber_through_point`].
pub const MAX_SOLVER_ITERATIONS: usize = 100_000;

const STEP_TOL: f64 = 1e-12;
const NEWTON_PERIOD: usize = 10;

/// A fibration of S³×S³ determined by a distance-decreasing map.
#[derive(Debug, Clone)]
pub struct Fibration<M> {
    map: M,
}

impl Fibration<ConstantMap> {
    /// The Hopf fibration, `f ≡ 1`, with fibers `H_v = {(x, v x)}`.
    pub fn hopf() -> Self {
        Self {
            map: ConstantMap(UnitQuaternion::ONE),
        }
    }
}

impl Fibration<FAlpha> {
    pub fn f_alpha(alpha: f64) -> Result<Self> {
        Ok(Self {
            map: FAlpha::new(alpha)?,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.map.alpha()
    }
}

impl<M: SphereMap> Fibration<M> {
    /// Rejects maps with a sampled Lipschitz ratio ≥ 1 over
    /// [`VALIDATION_PAIRS`] seeded pairs.
    pub fn new(map: M) -> Result<Self> {
        let ratio = lipschitz_estimate(&map, VALIDATION_PAIRS, 0);
        if ratio >= 1.0 {
            return Err(GeometryError::NotDistanceDecreasing { ratio });
        }
        Ok(Self { map })
    }

    /// Skips validation; membership and coverage results are meaningless
    /// if `map` is not distance-decreasing.
    pub fn new_unchecked(map: M) -> Self {
        Self { map }
    }

    pub fn map(&self) -> &M {
        &self.map
    }

    pub fn fiber(&self, p: UnitQuaternion) -> GreatThreeSphere {
        GreatThreeSphere::new(p, self.map.eval(p))
    }

    /// Finds the index `p` of the fiber through `(x, y)`.
    ///
    /// The fiber condition `y = p x f(p)⁻¹` is the fixed-point equation
    /// `p = P(p) := y f(p) x⁻¹`, and `P` is a contraction because `f` is
    /// distance-decreasing. Starting at `y x⁻¹`, the solver iterates `P`; every
    /// few steps it also tries a Newton step on `log(p⁻¹ P(p))`, kept only if
    /// it at least halves the step length. The step length `d(p, P(p))` equals
    /// the membership residual.
    pub fn solve_fiber_through_point(&self, point: ProductPoint) -> Result<UnitQuaternion> {
        let (x, y) = point;
        let x_inv = x.inverse();
        let step_map = |p: UnitQuaternion| y * self.map.eval(p) * x_inv;
        let defect = |p: UnitQuaternion| (p.inverse() * step_map(p)).log();

        let mut p = y * x_inv;
        let mut residual = f64::INFINITY;
        for iter in 0..MAX_SOLVER_ITERATIONS {
            let next = step_map(p);
            residual = geodesic_distance(p, next);
            if residual < STEP_TOL {
                return Ok(p);
            }
            if iter % NEWTON_PERIOD == 0 {
                if let Some(candidate) = newton_step(&defect, p) {
                    let r = geodesic_distance(candidate, step_map(candidate));
                    if r < 0.5 * residual {
                        p = candidate;
                        continue;
                    }
                }
            }
            p = next;
        }
        if residual <= MEMBERSHIP_TOL {
            return Ok(p);
        }
        Err(GeometryError::NoConvergence {
            iterations: MAX_SOLVER_ITERATIONS,
            residual,
        })
    }

    /// Largest distance, over `n_samples` lattice points `x`, from
    /// `q · (x, p x f(p)⁻¹)` to the fiber `Σ_{qp}`.
    pub fn verify_fiberwise_homogeneity(
        &self,
        q: UnitQuaternion,
        p: UnitQuaternion,
        n_samples: usize,
    ) -> f64 {
        let action = homogeneity_action(q);
        let source = self.fiber(p);
        let target = self.fiber(q * p);
        fibonacci_grid(n_samples.max(1))
            .into_iter()
            .map(|x| target.distance_to_point(action.apply(source.point(x))))
            .fold(0.0, f64::max)
    }
}

/// One Newton step for `G(p) = 0`, with `G` linearized in the right-invariant
/// frame `p ↦ p·exp(v)` by central differences.
fn newton_step<G>(g: &G, p: UnitQuaternion) -> Option<UnitQuaternion>
where
    G: Fn(UnitQuaternion) -> [f64; 3],
{
    const H: f64 = 1e-7;
    let g0 = g(p);
    let mut jac = [[0.0; 3]; 3];
    for col in 0..3 {
        let mut v = [0.0; 3];
        v[col] = H;
        let plus = g(p * UnitQuaternion::exp(v));
        v[col] = -H;
        let minus = g(p * UnitQuaternion::exp(v));
        for row in 0..3 {
            jac[row][col] = (plus[row] - minus[row]) / (2.0 * H);
        }
    }
    let rhs = [-g0[0], -g0[1], -g0[2]];
    let dv = solve3(jac, rhs)?;
    Some(p * UnitQuaternion::exp(dv))
}

/// Cramer's rule; `None` for near-singular systems.
fn solve3(m: [[f64; 3]; 3], b: [f64; 3]) -> Option<[f64; 3]> {
    let det = |m: [[f64; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let d = det(m);
    if d.abs() < 1e-14 || !d.is_finite() {
        return None;
    }
    let mut out = [0.0; 3];
    for (col, slot) in out.iter_mut().enumerate() {
        let mut mc = m;
        for row in 0..3 {
            mc[row][col] = b[row];
        }
        *slot = det(mc) / d;
    }
    Some(out)
}
