//! Corpus analysis for LLM-generated software: extracts observable frontend
//! features from program source, builds per-model feature-to-rule lookup
//! tables (FSTab) from static-analysis findings via smoothed PMI with a
//! diversity-penalized top-k selection, computes vulnerability recurrence
//! metrics (FVR / RVP / DVR / CDT), and simulates the black-box attack that
//! predicts hidden backend rules from visible features.
//!
//! The pipeline stages map onto the public modules:
//!
//! - [`corpus`] — data model and line-delimited corpus ingestion
//! - [`extractor`] — syntax-aware context extraction and action scoring
//! - [`builder`] — co-occurrence counting, PMI, FSTab construction
//! - [`metrics`] — recurrence metric suite and fingerprint aggregation
//! - [`attack`] — split protocols, prediction, ASR/ACR scoring, synthetic
//!   corpus generation

pub mod attack;
pub mod builder;
pub mod corpus;
pub mod error;
pub mod extractor;
pub mod metrics;

pub use error::{Error, Result};
