use thiserror::Error;

/// Error classes used across the crate.
///
/// `Hypothesis` marks certification preconditions that failed at runtime
/// (e.g. the eigen-gap proxy not exceeding the perturbation budget). The
/// report pipeline downgrades these to an uncertified report with reasons
/// instead of propagating, so callers normally see it only from the low-level
/// bound operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("config error: {0}")]
    Config(String),
    #[error("numeric error: {0}")]
    Numeric(String),
    #[error("hypothesis violation: {0}")]
    Hypothesis(String),
}

pub type Result<T> = std::result::Result<T, Error>;
