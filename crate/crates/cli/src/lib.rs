//! Command-line front end for the `nctop` tool: file formats, word syntax, reports
//! and the commands behind the binary.

pub mod commands;
pub mod files;
pub mod report;
pub mod syntax;

use nctop_core::{KernelError, LinearError, MonoidError, OpenError, QuiverError, RepError};
use thiserror::Error;

pub use report::{Report, Scale, Verdict};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Json {
        path: String,
        source: serde_json::Error,
    },
    #[error("syntax: {0}")]
    Syntax(String),
    #[error(transparent)]
    Linear(#[from] LinearError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Open(#[from] OpenError),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub const EXIT_CODE: i32 = 2;
}
