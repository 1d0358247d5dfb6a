//! Disentangling-and-generating multi-modal recommender.
//!
//! The crate trains a collaborative-filtering model whose item representations
//! are split into general (cross-modality) and specific (per-modality)
//! features. Missing modality features are generated from the other
//! modalities and from user modality preferences, and a per-modality item
//! graph is adaptively refined with the generated features.
//!
//! Modules follow the pipeline order:
//! - [`datagen`]: synthetic corpora, missing-modality plans, splits, file IO
//! - [`numcore`]: dense f64 compute tape, Adam, gradient checking
//! - [`graph`]: top-k item graphs, propagation, refinement
//! - [`model`]: learnable state and forward builders
//! - [`losses`]: objective terms (ranking, reconstruction, generation,
//!   mutual-information bounds, alignment)
//! - [`trainer`]: training loop, ablations, baselines
//! - [`eval`]: ranking metrics, missing-level breakdowns, retrieval
//! - [`cli`]: command-line entry points

pub mod cli;
pub mod config;
pub mod datagen;
pub mod eval;
pub mod graph;
pub mod losses;
pub mod model;
pub mod numcore;
pub mod trainer;

use thiserror::Error;

/// Crate-wide error type. Variants map onto process exit codes:
/// usage errors exit 1, data errors exit 2, numeric divergence exits 3.
#[derive(Debug, Error)]
pub enum DgError {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("data error: {0}")]
    Data(String),
    #[error("numeric error: {0}")]
    Numeric(String),
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl DgError {
    pub fn usage(msg: impl Into<String>) -> Self {
        DgError::Usage(msg.into())
    }
    pub fn data(msg: impl Into<String>) -> Self {
        DgError::Data(msg.into())
    }
    pub fn numeric(msg: impl Into<String>) -> Self {
        DgError::Numeric(msg.into())
    }
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        DgError::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            DgError::Usage(_) => 1,
            DgError::Data(_) | DgError::Io { .. } => 2,
            DgError::Numeric(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, DgError>;
