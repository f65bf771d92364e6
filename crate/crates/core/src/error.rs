use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at {line}:{col}: {message}")]
    Parse { line: u32, col: u32, message: String },

    #[error("version error: {0}")]
    Version(String),

    #[error("unknown node id #{0}")]
    UnknownNode(u32),

    #[error("invalid tree: {0}")]
    Invalid(String),

    #[error("expected exactly one function definition, found {0}")]
    Arity(usize),

    #[error("diff error at line {line}: {message}")]
    Diff { line: usize, message: String },

    #[error("patch does not apply to {file} at line {line}: {message}")]
    Apply { file: String, line: usize, message: String },

    #[error("edit operation {index} cannot be applied: {message}")]
    EditOp { index: usize, message: String },

    #[error("no differential nodes")]
    NoDifferentialNodes,

    #[error("invalid rule: {0}")]
    InvalidRule(String),

    #[error("vacuous rule")]
    VacuousRule,

    #[error("configuration error: {0}")]
    Config(String),

    #[error("refinement error: {0}")]
    Refine(String),

    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },

    #[error("manifest error: {0}")]
    Manifest(String),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}
