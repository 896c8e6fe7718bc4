use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("cannot read {}: {source}", path.display())]
    File {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),

    #[error("line {line}: expected {expected} vector components, found {found}")]
    DimensionMismatch {
        line: usize,
        expected: usize,
        found: usize,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: looks like a header line; only headerless GloVe text is accepted")]
    HeaderLine { line: usize },

    #[error("embedding source contains no entries")]
    EmptyEmbeddings,

    #[error("line {line}: definition line has no TAB separator")]
    MissingTab { line: usize },

    #[error("line {line}: definition of {lexeme:?} has no tokens")]
    EmptyDefinition { line: usize, lexeme: String },

    #[error("cosine similarity is undefined for a zero-norm vector")]
    ZeroNorm,

    #[error("vector length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("cannot sum an empty sequence of vectors")]
    EmptySum,

    #[error("invalid lexeme pair: {0}")]
    InvalidPair(String),

    #[error("threshold {0} is outside [-1, 1]")]
    ThresholdOutOfRange(f64),

    #[error("requested {requested} pairs but only {available} are available (short by {})", requested - available)]
    InsufficientPairs { requested: usize, available: usize },

    #[error("split fraction {0} must lie strictly between 0 and 1")]
    InvalidFraction(f64),

    #[error("cannot stratify split: {0}")]
    InfeasibleSplit(String),

    #[error("calibration needs at least one scorable {0}")]
    EmptyScores(String),

    #[error("score {0} is not a finite value in [-1, 1]")]
    InvalidScore(f64),

    #[error("compound file has no column named {0:?}")]
    MissingColumn(String),

    #[error("compound file contains no usable rows")]
    NoCompounds,

    #[error("corpus contains no tokens")]
    EmptyCorpus,

    #[error("config key {key:?}: {message}")]
    Config { key: String, message: String },

    #[error("config key {key:?}: input file {} does not exist", path.display())]
    MissingInput { key: String, path: PathBuf },

    #[error("{0}")]
    Usage(String),
}
