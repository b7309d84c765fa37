//! Crate-wide error type.

use crate::exactalg::LaurentPoly;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A precondition on the inputs was violated.
    #[error("domain error: {0}")]
    Domain(String),

    /// A rational function that was required to reduce to a (Laurent)
    /// polynomial did not; carries the reduced denominator.
    #[error("not a polynomial: reduced denominator {denominator}")]
    NotPolynomial { denominator: LaurentPoly },

    /// An enumeration bound was exceeded.
    #[error("resource bound exceeded: {0}")]
    Resource(String),

    /// Two routes to the same value disagreed; indicates a bug, not bad input.
    #[error("internal consistency error: {0}")]
    Inconsistent(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub fn inconsistent(msg: impl Into<String>) -> Self {
        Error::Inconsistent(msg.into())
    }
}
