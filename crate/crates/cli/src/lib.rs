//! Command-line front end for the great 3-sphere fibration library.

pub mod compare;
pub mod config;
pub mod output;
pub mod report;
pub mod sweep;
pub mod verify;

pub use config::{CliError, OutputFormat, RunConfig};
pub use report::{Check, Status, VerificationReport};
