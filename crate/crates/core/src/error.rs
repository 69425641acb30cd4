use thiserror::Error;

use crate::setting::Violation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} does not exist")]
    InvalidVertex(usize),
    #[error("arrow {0} does not exist")]
    InvalidArrow(usize),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("arrows {0} and {1} do not compose")]
    NotComposable(usize, usize),
    #[error("path is not a cycle")]
    NotACycle,
    #[error("cycle is not primitive")]
    NotPrimitive,
    #[error("invalid setting: {}", fmt_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("parity: {0}")]
    Parity(String),
    #[error("undefined dimension: {0}")]
    UndefinedDimension(String),
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("completion failed: {0}")]
    Completion(String),
    #[error("beta selection failed: {0}")]
    BetaSelection(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
}

fn fmt_violations(v: &[Violation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
