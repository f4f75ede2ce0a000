use thiserror::Error;

/// Errors raised by the workbench.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("lattice error: {0}")]
    Lattice(String),
    #[error("pole of order {order} at u = 0 (at most a simple pole is supported)")]
    PoleOrder { order: i64 },
    #[error("pole at u = 0 survives the traceless projection")]
    PoleSurvivesProjection,
    #[error("series expansion requires a function of X1 and Y1 only")]
    SeriesVariables,
    #[error("division by zero")]
    DivisionByZero,
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("enumeration bound exceeded: n = {n}, bound = {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("invalid triple: {0}")]
    InvalidTriple(String),
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
    #[error("s does not satisfy the Belavin-Drinfeld equations: {0}")]
    SNotSolution(String),
    #[error("s is not admissible for this associative structure: {0}")]
    InadmissibleS(String),
    #[error("not associative: {0}")]
    NotAssociative(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
