//! Batch verification harness: check registry, suite runner, conjecture
//! scanner, and report emitter over the core congruence library.

use thiserror::Error;

pub mod config;
pub mod profiles;
pub mod registry;
pub mod report;
pub mod runner;

pub use profiles::Profile;
pub use registry::{CheckSpec, Instance, SPECS};
pub use report::{emit_report, exit_status, ReportFormat, ReportRow};
pub use runner::{run_check, run_suite, run_sweep, scan_conjecture, SweepOptions};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown check id: {0} (see `verify list`)")]
    UnknownCheck(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0}")]
    BadArgs(String),
    #[error("i/o failure: {0}")]
    Io(String),
}

impl CliError {
    /// Usage errors exit 2; runtime i/o failures also map to 2 (they are not
    /// verification failures, which own exit code 1).
    pub fn exit_code(&self) -> u8 {
        2
    }
}
