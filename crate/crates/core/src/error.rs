use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A scalar outside the Wolof alphabet stops segmentation.
    #[error("cannot segment {word:?}: {ch:?} at scalar {index} is not a Wolof letter")]
    Unsegmentable { word: String, index: usize, ch: char },

    #[error("malformed lexicon at line {line}: {reason}")]
    MalformedLexicon { line: usize, reason: String },

    #[error("malformed alphabet override at line {line}: {reason}")]
    MalformedAlphabet { line: usize, reason: String },

    #[error("malformed transliteration rules at line {line}: {reason}")]
    MalformedRules { line: usize, reason: String },

    #[error("malformed cost table at line {line}: {reason}")]
    MalformedCosts { line: usize, reason: String },

    #[error("malformed corpus at line {line}: {reason}")]
    MalformedCorpus { line: usize, reason: String },

    #[error("malformed report: {0}")]
    MalformedReport(String),

    #[error("input of {len} scalars exceeds the oracle limit of {max}")]
    InputTooLong { len: usize, max: usize },

    #[error("the lexicon contains no words")]
    EmptyLexicon,

    #[error("the corpus contains no usable entries")]
    EmptyCorpus,

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// True for errors caused by the content of a data file rather than by
    /// the environment (missing file, bad flag).
    pub fn is_malformed_data(&self) -> bool {
        matches!(
            self,
            Error::MalformedLexicon { .. }
                | Error::MalformedAlphabet { .. }
                | Error::MalformedRules { .. }
                | Error::MalformedCosts { .. }
                | Error::MalformedCorpus { .. }
        )
    }
}

pub(crate) fn read_file(path: &std::path::Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::io(path, e))
}
