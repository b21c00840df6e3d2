//! Run configuration and its validation.

use std::path::PathBuf;

use serde::Serialize;

/// A verification suite selectable with `--suite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum SuiteName {
    /// Operator identities on `C^{1|1}` and `C^{n|n}`.
    Tensor,
    /// The numeric RTT oracle and the rewriting system.
    Rtt,
    /// Gauss decomposition and the anti-involution `ω`.
    Gauss,
    /// The Drinfeld relations and the rank-two block relations.
    Drinfeld,
    /// Serre relations and the rank-three block relations (needs `n ≥ 3`).
    Serre,
    /// The embeddings `ψ_m`.
    Embedding,
    /// The central series.
    Center,
    /// Leading terms for the second filtration.
    Grprime,
}

impl SuiteName {
    /// Every suite, in report order.
    pub const ALL: [SuiteName; 8] = [
        SuiteName::Tensor,
        SuiteName::Rtt,
        SuiteName::Gauss,
        SuiteName::Drinfeld,
        SuiteName::Serre,
        SuiteName::Embedding,
        SuiteName::Center,
        SuiteName::Grprime,
    ];

    /// Lower-case name as used on the command line.
    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::Tensor => "tensor",
            SuiteName::Rtt => "rtt",
            SuiteName::Gauss => "gauss",
            SuiteName::Drinfeld => "drinfeld",
            SuiteName::Serre => "serre",
            SuiteName::Embedding => "embedding",
            SuiteName::Center => "center",
            SuiteName::Grprime => "grprime",
        }
    }
}

/// Output format of the report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    /// Structured report with `schema: 1`.
    Json,
    /// One line per check and a summary.
    Text,
}

/// Everything a verification run depends on.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    /// Rank `n`.
    pub n: usize,
    /// Truncation order `L`.
    pub order: usize,
    /// Selected suites, sorted and deduplicated.
    pub suites: Vec<SuiteName>,
    /// Worker threads (`None`: one per core).
    pub threads: Option<usize>,
    /// Where to write the report (`None`: standard output).
    #[serde(skip)]
    pub report: Option<PathBuf>,
    /// Seed of the randomized rewriting checks.
    pub seed: u64,
    /// Report format.
    pub format: Format,
}

/// Reasons a configuration is rejected.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    /// `n = 0`.
    #[error("--n must be at least 1")]
    RankZero,
    /// `L < 2`.
    #[error("--order must be at least 2, got {0}")]
    OrderTooSmall(usize),
    /// The Serre suite was requested below rank 3.
    #[error("the serre suite needs --n 3 or larger, got {0}")]
    SerreNeedsRankThree(usize),
    /// `--threads 0`.
    #[error("--threads must be at least 1")]
    NoThreads,
}

impl RunConfig {
    /// Builds a configuration.  With no suites requested, every suite that
    /// applies at rank `n` is selected.
    pub fn new(n: usize, order: usize, suites: &[SuiteName]) -> RunConfig {
        let mut suites = if suites.is_empty() {
            SuiteName::ALL.into_iter().filter(|&s| s != SuiteName::Serre || n >= 3).collect()
        } else {
            suites.to_vec()
        };
        suites.sort();
        suites.dedup();
        RunConfig { n, order, suites, threads: None, report: None, seed: 0, format: Format::Text }
    }

    /// Checks the invariants `n ≥ 1`, `L ≥ 2`, Serre only for `n ≥ 3`.
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.n == 0 {
            return Err(ConfigError::RankZero);
        }
        if self.order < 2 {
            return Err(ConfigError::OrderTooSmall(self.order));
        }
        if self.suites.contains(&SuiteName::Serre) && self.n < 3 {
            return Err(ConfigError::SerreNeedsRankThree(self.n));
        }
        if self.threads == Some(0) {
            return Err(ConfigError::NoThreads);
        }
        Ok(())
    }
}
