use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("malformed resource {file}: {location}: {message}")]
    MalformedResource {
        file: String,
        location: String,
        message: String,
    },

    #[error(
        "conflicting entry in {file}: {cluster} maps {word:?} to both {first:?} and {second:?}"
    )]
    ConflictingEntry {
        file: String,
        cluster: String,
        word: String,
        first: String,
        second: String,
    },

    #[error("empty marker in {file} ({list})")]
    EmptyMarker { file: String, list: String },

    #[error("line {line}: expected 2 or 3 tab-separated fields, found {found}")]
    MalformedLine { line: usize, found: usize },

    #[error("line {line}: unknown PoS tag {tag:?}")]
    UnknownPosTag { line: usize, tag: String },

    #[error("line {line}: missing gold lemma column")]
    MissingGoldLemma { line: usize },

    #[error("alignment error: {gold} gold tokens but {predicted} predictions")]
    Alignment { gold: usize, predicted: usize },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
