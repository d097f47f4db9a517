use thiserror::Error;

/// Errors produced by graph construction, search, and the family formulas.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("corpus too large: {0} vertices exceeds the supported envelope of {1}")]
    CorpusTooLarge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("k out of range: {0} (k must be at least 2)")]
    KOutOfRange(usize),
    #[error("search budget exceeded after {0} nodes")]
    BudgetExceeded(u64),
    #[error("enumeration too large: node budget of {0} exceeded")]
    EnumerationTooLarge(u64),
    #[error("prime classification budget exceeded for p = {0}")]
    PrimeBudget(u64),
    #[error("out of theorem range: {0}")]
    OutOfRange(String),
    #[error("not a tree")]
    NotATree,
    #[error("diameter is not an odd number >= 3")]
    DiameterNotOddGe3,
    #[error("not a broken comb")]
    NotBrokenComb,
    #[error("antipodal colors are not unique in the coloring")]
    AntipodalColorsNotUnique,
    #[error("coloring has a rainbow progression")]
    RainbowPresent,
    #[error("coloring uses too few colors: need at least {0}")]
    TooFewColors(u32),
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("duplicate representative: vertex {0}")]
    DuplicateRepresentative(usize),
    #[error("minimal color-spanning subtree is not a path")]
    NotAPath,
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
