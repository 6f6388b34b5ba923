use thiserror::Error;

/// Errors raised by geometric constructions and solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("cannot normalize a quaternion with norm {0:e}")]
    ZeroNorm(f64),

    #[error("quaternion is not purely imaginary (real part {0:e})")]
    NotPurelyImaginary(f64),

    #[error("basis points are not orthogonal (inner product {0:e})")]
    NotOrthogonal(f64),

    #[error("midpoint of antipodal points is not unique")]
    AntipodalMidpoint,

    #[error("alpha = {0} is outside [0, pi/6]")]
    AlphaOutOfRange(f64),

    #[error(
        "offset sphere angles must satisfy 0 < phi < theta < pi (theta = {theta}, phi = {phi})"
    )]
    InvalidOffsetAngles { theta: f64, phi: f64 },

    #[error("great 3-spheres intersect (distance discrepancy {discrepancy:e})")]
    IntersectingSpheres { discrepancy: f64 },

    #[error("map is not distance-decreasing: sampled ratio {ratio} >= 1")]
    NotDistanceDecreasing { ratio: f64 },

    #[error(
        "fixed-point solver did not converge after {iterations} iterations (residual {residual:e})"
    )]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("fibers are parallel; no distinguished hot or cold set")]
    Parallel,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, GeometryError>;
