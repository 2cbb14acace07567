use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("strand count must be at least {min}, got {got}")]
    TooFewStrands { min: usize, got: usize },

    #[error("generator index {letter} out of range 1..={max} for {strands} strands")]
    InvalidLetter {
        letter: usize,
        max: usize,
        strands: usize,
    },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("equivalence class exceeds the closure cap of {cap} words")]
    ClassCapExceeded { cap: usize },

    #[error("enumeration of {requested} items exceeds the cap of {cap}")]
    EnumerationTooLarge { requested: u128, cap: usize },

    #[error("partition {parts:?} needs {needed} strands but only {strands} are available")]
    PartitionTooLarge {
        parts: Vec<usize>,
        needed: usize,
        strands: usize,
    },

    #[error("invalid partition {0:?}: parts must be weakly decreasing and at least 2")]
    InvalidPartition(Vec<usize>),

    #[error("invalid block sequence: {0}")]
    InvalidBlocks(String),

    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("unsupported format `{0}`")]
    UnsupportedFormat(String),

    #[error("cannot parse braid word `{0}`")]
    Parse(String),

    #[error("{0}")]
    Invalid(String),
}
