//! `compare`: pointwise-distance variance between fibers, Hopf against `f_α`.

use clifford_core::fibration::pointwise_distance_stats;
use clifford_core::quaternion::{exp_axis, sample_uniform};
use clifford_core::{Fibration, ImaginaryUnit, UnitQuaternion};
use serde::Serialize;

use crate::config::{CliError, RunConfig};
use crate::report::Status;

/// Random fiber pairs per fibration, on top of the fixed neighbor pair.
pub const RANDOM_PAIRS: usize = 16;
/// Lattice size for each variance.
pub const DISTANCE_SAMPLES: usize = 2_000;
/// Variances at or below this count as constant.
pub const PARALLEL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairVariance {
    pub p1: [f64; 4],
    pub p2: [f64; 4],
    pub variance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FibrationSummary {
    pub alpha: f64,
    pub max_variance: f64,
    pub pairs: Vec<PairVariance>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompareReport {
    pub seed: u64,
    pub samples: usize,
    pub status: Status,
    pub fibrations: Vec<FibrationSummary>,
}

impl CompareReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report is plain data");
        s.push('\n');
        s
    }
}

fn summarize(alpha: f64, seed: u64) -> Result<FibrationSummary, CliError> {
    let fib = Fibration::f_alpha(alpha)?;
    let mut bases = vec![(UnitQuaternion::ONE, exp_axis(ImaginaryUnit::J, 0.3))];
    bases.extend(
        sample_uniform(seed, 2 * RANDOM_PAIRS)
            .chunks(2)
            .map(|w| (w[0], w[1])),
    );
    let pairs: Vec<PairVariance> = bases
        .into_iter()
        .map(|(p1, p2)| PairVariance {
            p1: p1.to_array(),
            p2: p2.to_array(),
            variance: pointwise_distance_stats(&fib.fiber(p1), &fib.fiber(p2), DISTANCE_SAMPLES)
                .variance,
        })
        .collect();
    let max_variance = pairs.iter().map(|p| p.variance).fold(0.0, f64::max);
    Ok(FibrationSummary {
        alpha,
        max_variance,
        pairs,
    })
}

/// Hopf fibers must be parallel (every variance ≤ 1e-9); for `α > 0` some
/// pair must not be.
pub fn run_compare(cfg: &RunConfig) -> Result<CompareReport, CliError> {
    cfg.validate()?;
    let hopf = summarize(0.0, cfg.seed)?;
    let mut ok = hopf.max_variance <= PARALLEL_TOL;
    let mut fibrations = vec![hopf];
    if cfg.alpha() > 0.0 {
        let other = summarize(cfg.alpha(), cfg.seed)?;
        ok &= other.max_variance > PARALLEL_TOL;
        fibrations.push(other);
    }
    Ok(CompareReport {
        seed: cfg.seed,
        samples: DISTANCE_SAMPLES,
        status: if ok { Status::Pass } else { Status::Fail },
        fibrations,
    })
}
