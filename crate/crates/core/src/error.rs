use thiserror::Error;

use crate::model::CompareOp;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("arity mismatch for relation {relation}: declared {expected}, found {found} (line {line})")]
    ArityMismatch {
        relation: String,
        expected: usize,
        found: usize,
        line: usize,
    },

    #[error("cannot order {left} {op} {right}: only numeric values are ordered")]
    Incomparable {
        left: String,
        op: CompareOp,
        right: String,
    },

    #[error("constraint {constraint}: variable {variable} occurs only in comparisons")]
    UnsafeVariable {
        constraint: String,
        variable: String,
    },

    #[error("constraint {0} has no relational atoms")]
    EmptyConstraint(String),

    #[error("invalid value: {0}")]
    InvalidValue(String),

    #[error("limit exceeded: {limit} = {limit_value} (reached {reached})")]
    LimitExceeded {
        limit: &'static str,
        limit_value: usize,
        reached: usize,
    },

    #[error("hypergraph contains an empty edge; it has no transversal")]
    EmptyEdge,

    #[error("input is not an antichain: {0}")]
    NotAntichain(String),

    #[error("constraint class mismatch: {0}")]
    ClassMismatch(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    /// Short machine-readable tag, used for JSON error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "syntax",
            Error::ArityMismatch { .. } => "arity_mismatch",
            Error::Incomparable { .. } => "type_error",
            Error::UnsafeVariable { .. } => "unsafe_variable",
            Error::EmptyConstraint(_) => "empty_constraint",
            Error::InvalidValue(_) => "invalid_value",
            Error::LimitExceeded { .. } => "limit_exceeded",
            Error::EmptyEdge => "empty_edge",
            Error::NotAntichain(_) => "not_antichain",
            Error::ClassMismatch(_) => "class_mismatch",
            Error::Precondition(_) => "precondition",
        }
    }
}
