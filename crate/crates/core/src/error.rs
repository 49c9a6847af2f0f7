use thiserror::Error;

/// Why a search stopped before reaching a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Interrupt {
    NodeLimit,
    Timeout,
}

impl std::fmt::Display for Interrupt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Interrupt::NodeLimit => f.write_str("node limit reached"),
            Interrupt::Timeout => f.write_str("time limit reached"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime modulus in [2, 65536]")]
    NotPrime(u64),
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("field mismatch: GF({left}) vs GF({right})")]
    FieldMismatch { left: u32, right: u32 },
    #[error("guard exceeded: {what} ({value} > {limit})")]
    GuardExceeded {
        what: &'static str,
        value: u128,
        limit: u128,
    },
    #[error("search interrupted: {0}")]
    Interrupted(Interrupt),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("translation failed: {0}")]
    Translation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Guard and interruption failures are "unknown" outcomes rather than verdicts.
    pub fn is_unknown(&self) -> bool {
        matches!(self, Error::GuardExceeded { .. } | Error::Interrupted(_))
    }
}

pub(crate) fn guard(what: &'static str, value: u128, limit: u128) -> Result<()> {
    if value > limit {
        Err(Error::GuardExceeded { what, value, limit })
    } else {
        Ok(())
    }
}
