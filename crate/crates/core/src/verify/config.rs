use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::enumeration::{FamilyKind, GraphFamily, LABELED_CAP};
use crate::parity::PathBudget;

/// Largest `n` for sweeps over all `(A, B)` subset pairs.
pub const SET_PAIRS_CAP: usize = 6;
/// Largest `n` for exhaustive vertex-pair sweeps.
pub const VERTEX_PAIRS_CAP: usize = 7;
/// Largest `n` for sampled families in vertex-pair mode.
pub const SAMPLED_CAP: usize = 24;
/// Largest `n` for the identity suites that enumerate every subset `U`.
pub const IDENTITIES_CAP: usize = 6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("--n {n} exceeds the cap of {cap} for {what}")]
    Cap { n: usize, cap: usize, what: String },
    #[error("{0}")]
    Invalid(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PairMode {
    /// Singleton sets `A = {u}`, `B = {v}` with `u <= v`.
    Vertices,
    /// Every ordered pair of subsets.
    Sets,
}

impl FromStr for PairMode {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "vertices" => Ok(PairMode::Vertices),
            "sets" => Ok(PairMode::Sets),
            other => Err(ConfigError::Invalid(format!("unknown pair mode {other:?}"))),
        }
    }
}

impl fmt::Display for PairMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairMode::Vertices => "vertices",
            PairMode::Sets => "sets",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Tsv,
}

impl FromStr for OutputFormat {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "tsv" => Ok(OutputFormat::Tsv),
            other => Err(ConfigError::Invalid(format!("unknown format {other:?}"))),
        }
    }
}

/// Everything that determines a sweep. Echoed into every report header.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Config {
    pub max_n: usize,
    pub pairs: PairMode,
    pub family: FamilyKind,
    pub p: f64,
    pub seed: u64,
    /// Worker threads; 0 picks the machine default. Never affects results,
    /// so it is left out of reports.
    #[serde(skip)]
    pub workers: usize,
    pub path_budget: PathBudget,
    /// Samples per vertex count for the sampled families.
    pub count: usize,
    pub format: OutputFormat,
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_n: 5,
            pairs: PairMode::Sets,
            family: FamilyKind::AllLabeled,
            p: 0.5,
            seed: 0,
            workers: 0,
            path_budget: PathBudget::default(),
            count: 100,
            format: OutputFormat::Json,
            out: None,
        }
    }
}

impl Config {
    /// Vertex counts swept, ascending.
    pub fn sizes(&self) -> std::ops::RangeInclusive<usize> {
        self.family.min_n().max(1)..=self.max_n
    }

    /// Family parameters for one vertex count.
    pub fn family_for(&self, n: usize) -> GraphFamily {
        GraphFamily::new(self.family, n)
            .with_p(self.p)
            .with_seed(self.seed)
            .with_count(self.count)
    }

    fn cap(&self, cap: usize, what: &str) -> Result<(), ConfigError> {
        if self.max_n > cap {
            return Err(ConfigError::Cap {
                n: self.max_n,
                cap,
                what: what.into(),
            });
        }
        Ok(())
    }

    fn common(&self) -> Result<(), ConfigError> {
        if !(0.0..=1.0).contains(&self.p) {
            return Err(ConfigError::Invalid(format!(
                "--p {} outside [0, 1]",
                self.p
            )));
        }
        if self.path_budget.max_paths == 0 {
            return Err(ConfigError::Invalid(
                "--path-budget must be positive".into(),
            ));
        }
        if self.max_n < self.family.min_n() {
            return Err(ConfigError::Invalid(format!(
                "family {} needs --n >= {}",
                self.family,
                self.family.min_n()
            )));
        }
        Ok(())
    }

    /// Checks the caps of the sign-law sweep.
    pub fn validate_verify(&self) -> Result<(), ConfigError> {
        self.common()?;
        match (self.pairs, self.family.is_exhaustive()) {
            (PairMode::Sets, _) => self.cap(SET_PAIRS_CAP, "all subset pairs"),
            (PairMode::Vertices, true) => self.cap(VERTEX_PAIRS_CAP, "exhaustive vertex pairs"),
            (PairMode::Vertices, false) => self.cap(SAMPLED_CAP, "sampled vertex pairs"),
        }
    }

    /// Checks the caps of the counterexample hunt.
    pub fn validate_hunt(&self) -> Result<(), ConfigError> {
        self.common()?;
        if self.pairs != PairMode::Vertices {
            return Err(ConfigError::Invalid(
                "hunt works on vertex pairs only".into(),
            ));
        }
        if self.family.is_exhaustive() {
            self.cap(LABELED_CAP, "exhaustive hunts")
        } else {
            self.cap(SAMPLED_CAP, "sampled hunts")
        }
    }

    pub fn validate_identities(&self) -> Result<(), ConfigError> {
        self.common()?;
        self.cap(IDENTITIES_CAP, "identity suites")
    }
}
