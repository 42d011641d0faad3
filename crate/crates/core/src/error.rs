use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid set: {0}")]
    InvalidSet(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("{what} supports at most {limit} elements, got {n}")]
    SizeLimit {
        what: &'static str,
        limit: usize,
        n: usize,
    },
    #[error("invalid stream: {0}")]
    InvalidStream(String),
    #[error("degenerate instance: {0}")]
    DegenerateInstance(String),
    #[error("cannot read {path}: {message}")]
    Input { path: PathBuf, message: String },
    #[error("cannot write {path}: {message}")]
    Write { path: PathBuf, message: String },
}
