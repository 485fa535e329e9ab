use thiserror::Error;

/// Errors produced by graph construction, generation, and metric evaluation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid in-degree specification: {0}")]
    InvalidDegreeSpec(String),

    #[error("invalid node selection: {0}")]
    InvalidNodes(String),

    #[error("edge list parse error at line {line}: {reason}")]
    EdgeListParse { line: usize, reason: String },

    #[error("graph has {n} nodes but the operation requires at least {required}")]
    GraphTooSmall { n: usize, required: usize },

    #[error("unsupported motif size {0} (must be 3 or 4)")]
    UnsupportedMotifSize(usize),

    #[error("modularity is undefined for a graph with no edges")]
    UndefinedModularity,

    #[error("degenerate small-worldness term: {0}")]
    DegenerateTerm(&'static str),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid strategy parameters: {0}")]
    InvalidStrategy(String),

    #[error("rank-sum test requires two non-empty samples")]
    EmptySample,

    #[error("weight template has an empty mask")]
    EmptyMask,

    #[error("invalid weight vector: {0}")]
    InvalidWeights(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
