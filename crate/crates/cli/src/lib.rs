//! Experiment harness behind the `minorlink` binary: input loading, the
//! subcommands, the connectivity-threshold replication and oracle sweeps.
//!
//! Every command produces a [`Report`]: an exit code plus JSON records that
//! the binary prints one per line.

pub mod commands;
pub mod config;
pub mod experiments;
pub mod sampler;

use std::path::Path;

use serde_json::Value;

pub use commands::run;
pub use config::{ExperimentConfig, SubsetPlan, SweepConfig, TheoremConfig};

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Input { path: String, source: minorlink::Error },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("sampler: {0}")]
    Sampler(String),
    #[error("corpus: {0}")]
    Corpus(String),
    #[error(transparent)]
    Engine(#[from] minorlink::Error),
}

/// Exit status 2 is reserved for input and configuration errors.
pub const EXIT_INPUT: i32 = 2;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub code: i32,
    pub records: Vec<Value>,
    /// Free-form diagnostics for stderr.
    pub notes: Vec<String>,
}

impl Report {
    pub fn json_lines(&self) -> String {
        self.records.iter().map(|r| format!("{r}\n")).collect()
    }
}

pub(crate) fn read_text(path: &Path) -> Result<String, HarnessError> {
    std::fs::read_to_string(path).map_err(|source| HarnessError::Io { path: path.display().to_string(), source })
}

pub(crate) fn write_text(path: &Path, text: &str) -> Result<(), HarnessError> {
    std::fs::write(path, text).map_err(|source| HarnessError::Io { path: path.display().to_string(), source })
}

/// Runs `f` on a pool with `workers` threads, or on the global pool.
#[cfg(feature = "parallel")]
pub fn with_workers<R: Send>(workers: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    match workers {
        Some(w) => rayon::ThreadPoolBuilder::new().num_threads(w.max(1)).build().expect("thread pool").install(f),
        None => f(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn with_workers<R: Send>(_workers: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    f()
}

/// Worker count from `MINORLINK_WORKERS`, if set to a positive integer.
pub fn workers_from_env() -> Option<usize> {
    std::env::var("MINORLINK_WORKERS").ok()?.trim().parse().ok().filter(|&w| w > 0)
}
