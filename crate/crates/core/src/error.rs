use thiserror::Error;

use crate::coxeter::CartanType;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: char, rank: usize },

    #[error("unknown Cartan type {0:?}")]
    UnknownType(String),

    #[error("simple root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("elements belong to different Weyl groups ({0} vs {1})")]
    MismatchedGroups(CartanType, CartanType),

    #[error("{what}: size {size} exceeds enumeration guard {limit}")]
    GuardExceeded { what: String, size: u64, limit: u64 },

    #[error("not a diagram automorphism: {0}")]
    NotAutomorphism(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partitions have different weights ({0} vs {1})")]
    WeightMismatch(usize, usize),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("not an involution: {0}")]
    NotInvolution(String),

    #[error("invalid Jordan class: {0}")]
    InvalidJordanClass(String),

    #[error("class is not spherical: {0}")]
    NotSpherical(String),

    #[error("{0} is not a supported prime modulus")]
    NotPrime(u32),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("eigenvalue data unusable over F_{p}: {reason}")]
    FieldData { p: u32, reason: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
