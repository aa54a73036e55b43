use thiserror::Error;

use crate::group::Elem;

/// Errors raised while building groups, subgroups, generating sets and
/// the analyses on top of them.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{what} of size {size} exceeds the cap of {cap}")]
    SizeCap { what: &'static str, size: usize, cap: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("element {0} is out of range for a group of order {1}")]
    ElementOutOfRange(usize, usize),

    #[error("subgroup candidate does not contain the identity")]
    IdentityMissing,

    #[error("subset is not closed: {0}")]
    NotClosed(String),

    #[error("generating set contains the identity")]
    IdentityInS,

    #[error("S ∩ H is not symmetric: inverse of {elem} ({label}) is missing")]
    SymmetryViolation { elem: Elem, label: String },

    #[error("element {0} is not in the subgroup")]
    NotInSubgroup(Elem),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("map is not a group automorphism: {0}")]
    NotAutomorphism(String),

    #[error("graph is not regular")]
    NotRegular,

    #[error("graph is not connected")]
    NotConnected,

    #[error("eigensolver did not converge after {0} iterations")]
    NonConvergence(usize),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
