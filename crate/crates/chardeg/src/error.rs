use thiserror::Error;

/// Errors produced by group construction, table computation, and parsing.
#[derive(Debug, Error)]
pub enum Error {
    #[error("group order exceeds the configured cap of {cap} elements")]
    OrderCapExceeded { cap: usize },

    #[error("class count exceeds the configured cap of {cap} classes")]
    ClassCapExceeded { cap: usize },

    #[error("invalid group parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error at byte {position}: expected {expected}")]
    Parse { position: usize, expected: String },

    #[error("zeta_{conductor} -> zeta_{conductor}^{k} is not a field automorphism (gcd(k, {conductor}) != 1)")]
    InvalidAutomorphism { k: i64, conductor: u64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
