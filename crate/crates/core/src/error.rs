use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A length exceeded the configured materialization cap.
    #[error("size limit exceeded: n = {n} is not below the cap {cap} for {what}")]
    SizeLimit { what: &'static str, n: usize, cap: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
