//! Library side of the `circmat` command: measure specs, the check suite,
//! and the generation and convergence pipelines.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod asymptotics;
pub mod generate;
pub mod report;
pub mod spec;
pub mod verify;

use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub use report::{CheckResult, RunReport};
pub use spec::{parse_spec, parse_spec_str, MeasureSpec, SpecError, WeightFamily};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Core(#[from] circmat_core::Error),
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("JSON serialization failed: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn io(path: &Path, source: std::io::Error) -> Self {
        Self::Io {
            path: path.display().to_string(),
            source,
        }
    }
}

/// Random head used by `verify --seed` without a spec file.
pub fn random_spec(seed: u64) -> MeasureSpec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    MeasureSpec::Schur(circmat_core::SchurSequence::random(&mut rng, 8, 0.8))
}
