use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Input data is structurally malformed (wrong shapes, dangling indices).
    /// Distinct from a well-formed table that merely violates an axiom.
    #[error("structural error: {0}")]
    Structural(String),

    /// A computation exceeded a configured resource cap.
    #[error("resource cap exceeded: {what} ({value} > cap {cap})")]
    ResourceCap {
        what: &'static str,
        value: u64,
        cap: u64,
    },

    /// An operation that requires integral Frobenius-Perron dimensions was
    /// invoked on a ring that is not integral.
    #[error("non-integral ring: {0}")]
    NonIntegral(String),

    /// An iterative numerical method failed to converge or to produce a
    /// certifiable result after the allowed retries.
    #[error("numerical degeneracy: {0}")]
    Numerical(String),

    /// Invalid parameters for a family constructor or an operation.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Input rejected because it fails a validation precondition.
    #[error("validation failed: {0}")]
    Validation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
