use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A parameter is outside the range an operation accepts.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Malformed textual input (permutation or composition notation).
    #[error("parse error: {0}")]
    Parse(String),

    /// The request would materialize more compositions than the cap allows.
    #[error("size cap exceeded: computing this would need {required} compositions (cap {cap})")]
    CapExceeded { required: String, cap: u64 },

    /// A floating-point route drifted outside its tolerance; the result
    /// cannot be trusted at the requested size.
    #[error("precision failure: {0}")]
    Precision(String),
}

pub type Result<T> = std::result::Result<T, Error>;
