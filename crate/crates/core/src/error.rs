use thiserror::Error;

/// Errors raised by the numeric layer, the construction kernel and the recipes.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("precision must be at least {min} significant digits, got {got}")]
    Precision { got: u32, min: u32 },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("range error: {0}")]
    Range(String),
    #[error("singular configuration: {0}")]
    Singularity(String),
    #[error("coincident points: {0}")]
    Coincidence(String),
    #[error("quadratic has no real roots")]
    NoRealRoots,
    #[error("degenerate construction: {0}")]
    Degenerate(String),
    #[error("branch selection failed: {0}")]
    BranchSelection(String),
    #[error("closed forms disagree: {0}")]
    Consistency(String),
    #[error("gcd({n}, {m}) = {gcd}, expected coprime orders")]
    NotCoprime { n: u64, m: u64, gcd: u64 },
    #[error("the {0}-gon is not constructible with ruler and compass")]
    NotConstructible(u64),
    #[error("unknown object {0}")]
    UnknownObject(String),
    #[error("trace error: {0}")]
    Trace(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
