//! Grid-plus-descent extremization on S³, used as an oracle for the
//! analytic hot/cold circles.

use rayon::prelude::*;

use super::{point_to_diagonal_offset_distance, OffsetSphereParams};
use crate::descent::CompassSearch;
use crate::error::{GeometryError, Result};
use crate::quaternion::{fibonacci_grid, grid_spacing, UnitQuaternion};

/// Compass steps applied to each candidate grid point.
pub const DEFAULT_REFINE_STEPS: usize = 50;

/// Grid points within this fraction of the spread from an extremum are refined.
const CANDIDATE_BAND: f64 = 0.05;

/// Refined points within this fraction of the spread from the best are kept.
const KEEP_BAND: f64 = 1e-3;

/// Below this spread the function is treated as constant.
const DEGENERATE_SPREAD: f64 = 1e-6;

/// Approximate argmin and argmax sets of a function on S³.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericExtrema {
    pub minimizers: Vec<UnitQuaternion>,
    pub maximizers: Vec<UnitQuaternion>,
    pub min_value: f64,
    pub max_value: f64,
    /// Nominal spacing of the starting grid.
    pub spacing: f64,
    /// Set when the function is constant to within 1e-6 on the grid; both
    /// point sets are then empty.
    pub degenerate: bool,
}

/// Evaluates `f` on a `grid_size`-point lattice, refines the points near each
/// extremum with a short compass search, and keeps those that end up within
/// `1e-3·spread` of the best value found.
pub fn numeric_extrema<F>(f: F, grid_size: usize, refine_steps: usize) -> Result<NumericExtrema>
where
    F: Fn(UnitQuaternion) -> f64 + Sync,
{
    if grid_size == 0 {
        return Err(GeometryError::InvalidArgument(
            "grid_size must be positive".into(),
        ));
    }
    let grid = fibonacci_grid(grid_size);
    let spacing = grid_spacing(grid_size);
    let values: Vec<f64> = grid.par_iter().map(|&z| f(z)).collect();
    let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let spread = hi - lo;
    if spread < DEGENERATE_SPREAD {
        return Ok(NumericExtrema {
            minimizers: Vec::new(),
            maximizers: Vec::new(),
            min_value: lo,
            max_value: hi,
            spacing,
            degenerate: true,
        });
    }

    let search = CompassSearch::new(0.5 * spacing, refine_steps);
    let refine = |keep: &dyn Fn(f64) -> bool, maximize: bool| -> Vec<(UnitQuaternion, f64)> {
        let starts: Vec<UnitQuaternion> = grid
            .iter()
            .zip(&values)
            .filter(|(_, &v)| keep(v))
            .map(|(&z, _)| z)
            .collect();
        starts
            .par_iter()
            .map(|&z| {
                if maximize {
                    search.maximize(&f, z)
                } else {
                    search.minimize(&f, z)
                }
            })
            .collect()
    };

    let low = refine(&|v| v <= lo + CANDIDATE_BAND * spread, false);
    let high = refine(&|v| v >= hi - CANDIDATE_BAND * spread, true);
    let min_value = low.iter().map(|p| p.1).fold(lo, f64::min);
    let max_value = high.iter().map(|p| p.1).fold(hi, f64::max);
    let band = KEEP_BAND * spread;
    Ok(NumericExtrema {
        minimizers: low
            .into_iter()
            .filter(|p| p.1 <= min_value + band)
            .map(|p| p.0)
            .collect(),
        maximizers: high
            .into_iter()
            .filter(|p| p.1 >= max_value - band)
            .map(|p| p.0)
            .collect(),
        min_value,
        max_value,
        spacing,
        degenerate: false,
    })
}

/// Numeric hot (argmin) and cold (argmax) sets of the diagonal distance to
/// an offset sphere.
pub fn hot_cold_numeric(params: &OffsetSphereParams, grid_size: usize) -> Result<NumericExtrema> {
    numeric_extrema(
        |z| point_to_diagonal_offset_distance(z, params),
        grid_size,
        DEFAULT_REFINE_STEPS,
    )
}
