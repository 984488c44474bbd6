use thiserror::Error;

/// Failure modes shared by every evaluator in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ZetaError {
    /// An argument lies outside the region where the requested function is defined
    /// (or outside the region this crate supports).
    #[error("domain error: {0}")]
    Domain(String),

    /// The evaluator could not certify the requested accuracy within its configured limits.
    #[error("accuracy error: {what}: achieved {achieved:.3e}, required {required:.3e}")]
    Accuracy {
        what: String,
        achieved: f64,
        required: f64,
    },

    /// Two independent routes to the same quantity disagree.
    #[error("route mismatch: {what}: {first} vs {second} (relative {rel:.3e})")]
    RouteMismatch {
        what: String,
        first: f64,
        second: f64,
        rel: f64,
    },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("golden table: {0}")]
    Golden(String),
}

pub type Result<T> = std::result::Result<T, ZetaError>;

pub(crate) fn domain(msg: impl Into<String>) -> ZetaError {
    ZetaError::Domain(msg.into())
}
