use thiserror::Error;

/// Failure of a chain operation or construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("element `{element}` does not belong to {chain}")]
    Encoding { chain: String, element: String },
    #[error("{op} is not defined on the unbounded chain {chain}")]
    Unsupported { op: &'static str, chain: String },
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("cannot construct chain: {0}")]
    Construction(String),
    #[error("index arithmetic overflowed in {0}")]
    Overflow(&'static str),
}

/// Syntax error with the byte offset where parsing stopped.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at {position}: expected {}, found {found}", expected.join(" | "))]
pub struct ParseError {
    pub position: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl ParseError {
    pub fn new(position: usize, expected: &[&str], found: impl Into<String>) -> Self {
        ParseError {
            position,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: found.into(),
        }
    }
}

/// Failure while evaluating a formula or term.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("variable `{0}` has no assignment")]
    Unassigned(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Failure of an identity check (as opposed to a failing identity, which is
/// reported as a verdict).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("valuation source not applicable: {0}")]
    Strategy(String),
    #[error("ill-formed equation: {0}")]
    Equation(String),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
