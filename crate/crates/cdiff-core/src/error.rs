use crate::field::Elem;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid element {value}: not below field order {order}")]
    InvalidElement { value: u64, order: u64 },
    #[error("argument error: {0}")]
    Argument(String),
    #[error("not a permutation: F({x1}) = F({x2}) = {value}")]
    NotPermutation { x1: Elem, x2: Elem, value: Elem },
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    #[error("parse error at byte {offset}: {msg}")]
    Parse { msg: String, offset: usize },
    #[error("trinomial solver mismatch (closed form vs enumeration): {0}")]
    ClosedFormMismatch(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("property refutation: {0}")]
    Refutation(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
