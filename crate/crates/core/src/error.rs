use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A dense computation was requested beyond its size bound.
    #[error("capacity error: {what} = {requested} exceeds the limit of {limit}")]
    Capacity {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    /// The measurement optimizer did not reach its tolerance.
    #[error("computation error: {message} (best value found: {best})")]
    Computation { message: String, best: f64 },

    /// Two routes to the same quantity disagree beyond rounding.
    #[error("internal consistency error: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn consistency(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }
}
