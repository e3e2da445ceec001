//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter that must be prime is not.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// A requested object exceeds a configured size bound.
    #[error("size {requested} exceeds the configured bound {bound} ({what})")]
    SizeExceeded {
        what: &'static str,
        requested: u128,
        bound: u128,
    },

    /// An exponent that must divide the multiplicative group order does not.
    #[error("{d} does not divide the group order {group_order}")]
    NotADivisor { d: u64, group_order: u64 },

    /// 0 raised to a non-positive power.
    #[error("zero cannot be raised to a non-positive power")]
    ZeroToNonpositive,

    /// A precondition on the parameter bundle failed.
    #[error("bad parameters: {0}")]
    BadParams(String),

    /// An exact division did not come out exact, signalling inconsistent inputs.
    #[error("inexact division: {0}")]
    InexactDivision(String),
}

pub type Result<T> = std::result::Result<T, Error>;
