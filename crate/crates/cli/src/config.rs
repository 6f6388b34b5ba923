use std::f64::consts::{FRAC_PI_2, FRAC_PI_6};
use std::path::PathBuf;

use clap::ValueEnum;
use serde::Serialize;
use thiserror::Error;

/// Slack on the upper α bound so that a decimal π/6 typed on the command
/// line is accepted.
const ALPHA_SLACK: f64 = 1e-12;

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_SAMPLES: usize = 1_000;
pub const DEFAULT_GRID: usize = 10_000;
pub const DEFAULT_EPSILON: f64 = 1e-3;
pub const DEFAULT_FRAMES: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Svg,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Geometry(#[from] clifford_core::GeometryError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io { .. } => 3,
            // only reachable when a computation refuses valid-looking input
            CliError::Geometry(_) => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub alpha: f64,
    pub epsilon: f64,
    pub n_frames: usize,
    pub grid_size: usize,
    pub n_samples: usize,
    pub seed: u64,
    pub output_format: OutputFormat,
    #[serde(skip)]
    pub output_path: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            alpha: FRAC_PI_6,
            epsilon: DEFAULT_EPSILON,
            n_frames: DEFAULT_FRAMES,
            grid_size: DEFAULT_GRID,
            n_samples: DEFAULT_SAMPLES,
            seed: DEFAULT_SEED,
            output_format: OutputFormat::Json,
            output_path: None,
        }
    }
}

impl RunConfig {
    /// Checks every bound; nothing is computed from a config that fails here.
    pub fn validate(&self) -> Result<(), CliError> {
        if !(self.alpha >= 0.0 && self.alpha <= FRAC_PI_6 + ALPHA_SLACK) {
            return Err(CliError::Usage(format!(
                "alpha = {} is outside [0, pi/6]",
                self.alpha
            )));
        }
        if !(self.epsilon > 0.0 && self.epsilon < FRAC_PI_2) {
            return Err(CliError::Usage(format!(
                "epsilon = {} is outside (0, pi/2)",
                self.epsilon
            )));
        }
        if self.n_frames < 4 {
            return Err(CliError::Usage(format!(
                "frames = {} is below 4",
                self.n_frames
            )));
        }
        if self.grid_size == 0 {
            return Err(CliError::Usage("grid must be positive".into()));
        }
        if self.n_samples == 0 {
            return Err(CliError::Usage("samples must be positive".into()));
        }
        Ok(())
    }

    /// α clamped back into range after the slack in [`validate`](Self::validate).
    pub fn alpha(&self) -> f64 {
        self.alpha.min(FRAC_PI_6)
    }
}
