//! Reproducible verification sweeps over graph families.

pub mod config;
pub mod identities;
pub mod report;
pub mod shard;
pub mod sweep;

use thiserror::Error;

use crate::error::EnumerationError;

pub use config::{Config, ConfigError, OutputFormat, PairMode};
pub use identities::run_identities;
pub use report::{HuntReport, IdentityReport, Law, Report, SweepReport, Witness};
pub use sweep::{distance_sign, hunt, verify_sweep};

#[derive(Debug, Error)]
pub enum SweepError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
}
