use std::fmt;

use thiserror::Error;

/// Why a semigroup failed group detection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotAGroupReason {
    NoIdentity,
    /// Some row or column of the table is not a permutation, so at least one
    /// element lacks an inverse.
    NotLatin,
}

impl fmt::Display for NotAGroupReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotAGroupReason::NoIdentity => f.write_str("no two-sided identity"),
            NotAGroupReason::NotLatin => {
                f.write_str("element without inverse (table is not a Latin square)")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("duplicate element name `{name}` at line {line}, column {column}")]
    DuplicateName {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("element name `{name}` is reserved")]
    ReservedName { name: String },
    #[error("table is not square: {message}")]
    NonSquare { message: String },
    #[error("unknown element name `{name}` at line {line}, column {column}")]
    UnknownName {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("operation is not associative: ({i}*{j})*{k} != {i}*({j}*{k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("element index {index} out of range for order {order}")]
    OutOfRange { index: usize, order: usize },
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("family `{family}`: {message}")]
    FamilyParameter { family: String, message: String },
    #[error("partition is not a congruence: {u}~{u2} and {v}~{v2} but {u}*{v} and {u2}*{v2} lie in different classes")]
    IncompatibleCongruence {
        u: usize,
        u2: usize,
        v: usize,
        v2: usize,
    },
    #[error("group structure required: {0}")]
    NotAGroup(NotAGroupReason),
    #[error("element {element} is not in the commutator subgroup")]
    NotInDerivedSubgroup { element: usize },
    #[error("elements {u} and {v} lie in different commutator cosets")]
    NotRelated { u: usize, v: usize },
    #[error("invalid commutator decomposition: {0}")]
    InvalidDecomposition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
