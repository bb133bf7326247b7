use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    Parameter(String),

    #[error("{what} of size {size} exceeds the cap of {cap}{hint}")]
    SizeLimit {
        what: &'static str,
        size: u128,
        cap: usize,
        hint: &'static str,
    },

    #[error("connection set does not generate the group: reached {reached} of {order} elements")]
    NotConnected { reached: usize, order: usize },

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn param<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parameter(msg.into()))
}
