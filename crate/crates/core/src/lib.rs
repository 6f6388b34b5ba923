//! Fibrations of S³×S³ by great 3-spheres.
//!
//! Every distance-decreasing map `f: S³ → S³` gives a fibration whose fiber
//! over `p` is the graph of `x ↦ p x f(p)⁻¹`. The constant map gives the Hopf
//! fibration; `f_α(p) = p e^{iα} p⁻¹` with `0 < α ≤ π/6` gives fibrations
//! that are fiberwise homogeneous but whose fibers are not parallel.
//!
//! ```
//! use clifford_core::{Fibration, UnitQuaternion, petro_disjoint};
//!
//! let fib = Fibration::f_alpha(std::f64::consts::FRAC_PI_6).unwrap();
//! let a = fib.fiber(UnitQuaternion::ONE);
//! let b = fib.fiber(UnitQuaternion::J);
//! assert!(petro_disjoint(&a, &b));
//! ```

pub mod descent;
pub mod error;
pub mod extremal;
pub mod fibration;
pub mod quaternion;

pub use error::{GeometryError, Result};
pub use extremal::{
    eggbeater_sweep, hot_cold_analytic, hot_cold_numeric, hot_cold_on_sigma1, reduce_to_diagonal,
    HotColdFrame, OffsetSphereParams, Placement, Reduction,
};
pub use fibration::{
    petro_discrepancy, petro_disjoint, product_distance, Fibration, GreatThreeSphere, PairIsometry,
    ProductPoint, SphereIsometry, SphereMap,
};
pub use quaternion::{geodesic_distance, GreatCircle, ImaginaryUnit, UnitQuaternion};
