//! Ingestion, export and the command implementations behind the binary.
//!
//! Every command returns an [`Outcome`]; the binary prints its lines and
//! maps it to an exit code.

pub mod commands;
pub mod corpus;
pub mod dot;
pub mod groupfile;
pub mod sweep;

use std::path::PathBuf;

use thiserror::Error;

use crate::graph::GraphError;
use crate::modact::ModError;
use crate::numtheory::NumError;
use crate::psl2::Psl2Error;

pub use corpus::{ingest_degree_sets, parse_corpus, CorpusEntry};
pub use dot::export_dot;
pub use groupfile::{load_group_file, GroupFile};
pub use sweep::{sweep, SweepOptions, SweepRow};

/// Exit code when every check passes.
pub const EXIT_OK: i32 = 0;
/// Exit code when a checked property fails; a witness is printed.
pub const EXIT_VIOLATION: i32 = 1;
/// Exit code for bad input or usage.
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}:{line}: {message}")]
    Json {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("{path}:{line}: entry {name:?}: {source}")]
    Entry {
        path: PathBuf,
        line: usize,
        name: String,
        source: GraphError,
    },
    #[error("{path}:{line}: duplicate entry name {name:?} (first on line {first})")]
    DuplicateName {
        path: PathBuf,
        line: usize,
        name: String,
        first: usize,
    },
    #[error("{path}: no entry named {name:?}")]
    NoSuchEntry { path: PathBuf, name: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Psl2(#[from] Psl2Error),
    #[error(transparent)]
    Mod(#[from] ModError),
    #[error(transparent)]
    Num(#[from] NumError),
}

/// Report lines plus whether any checked property failed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub lines: Vec<String>,
    pub violated: bool,
}

impl Outcome {
    pub fn push(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    pub fn violation(&mut self, line: impl Into<String>) {
        self.violated = true;
        self.lines.push(line.into());
    }

    pub fn exit_code(&self) -> i32 {
        if self.violated {
            EXIT_VIOLATION
        } else {
            EXIT_OK
        }
    }
}
