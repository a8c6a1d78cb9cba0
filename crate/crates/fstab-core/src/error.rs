//! Error types shared across the pipeline.

use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// A record that could not be parsed; `line` is 1-based within the file.
    #[error("{path}:{line}: malformed record: {message}")]
    Malformed {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("{path}:{line}: duplicate program_id {id:?}")]
    DuplicateProgramId {
        path: PathBuf,
        line: usize,
        id: String,
    },

    #[error("{path}:{line}: duplicate (task_id, rephrase_index, model) = ({task_id:?}, {rephrase_index}, {model:?})")]
    DuplicateTaskKey {
        path: PathBuf,
        line: usize,
        task_id: String,
        rephrase_index: u32,
        model: String,
    },

    /// A finding or label references a program_id absent from the manifest.
    #[error("{path}:{line}: unresolved program_id {id:?}")]
    UnresolvedProgram {
        path: PathBuf,
        line: usize,
        id: String,
    },

    /// A record violated a field invariant (empty domain, line < 1, ...).
    #[error("{path}:{line}: invalid record: {message}")]
    InvalidRecord {
        path: PathBuf,
        line: usize,
        message: String,
    },

    /// A finding location has no co-located feature label.
    #[error("no feature label co-located with finding {program_id}:{file}:{line}")]
    MissingLabel {
        program_id: String,
        file: String,
        line: u32,
    },

    /// An operation precondition was violated (zero co-occurrence for PMI,
    /// lambda = 0 for the displacement threshold, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A metric has an empty denominator. Deliberately distinct from a zero
    /// value so harnesses can report "--" cells and exit accordingly.
    #[error("undefined metric: {0}")]
    UndefinedMetric(String),

    #[error("taxonomy error: {0}")]
    Taxonomy(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
