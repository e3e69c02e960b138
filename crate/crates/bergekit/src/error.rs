//! Crate-wide error type.

use thiserror::Error;

use crate::matrix::MAX_ROWS;

#[derive(Debug, Error)]
pub enum Error {
    #[error("row count {0} out of range 1..={MAX_ROWS}")]
    RowCountOutOfRange(usize),
    #[error("row count mismatch: {left} vs {right}")]
    RowCountMismatch { left: u32, right: u32 },
    #[error("combined row count {0} exceeds {MAX_ROWS}")]
    TooManyRows(usize),
    #[error("matrix is not simple")]
    NotSimple,
    #[error("canonical form needs at most 10 rows, got {0}")]
    CanonicalRowLimit(u32),
    #[error("matrix has {0} zero entries, limit for family enumeration is 20")]
    TooManyZeroEntries(usize),
    #[error("{op}: parameter {param} out of range")]
    BadParameter {
        op: &'static str,
        param: &'static str,
    },
    #[error("exact search limit exceeded: {0}")]
    SearchLimit(String),
    #[error("graph has {0} vertices, exact invariants need at most 12")]
    GraphTooLarge(usize),
    #[error("classifier accepts 1..=5 effective rows, got {0}")]
    ClassifierRowLimit(u32),
    #[error("not the incidence matrix of a forest on at least 5 vertices: {0}")]
    NotForestIncidence(&'static str),
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

/// Errors from the text formats accepted on the command line.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("bad header line, expected \"<rows> <cols>\"")]
    BadHeader,
    #[error("row count {0} out of range 1..={MAX_ROWS}")]
    RowsOutOfRange(usize),
    #[error("line {0}: wrong length")]
    BadRowLength(usize),
    #[error("line {line}: invalid character {ch:?}")]
    BadChar { line: usize, ch: char },
    #[error("missing row line {0}")]
    MissingRow(usize),
    #[error("column literal: empty column")]
    EmptyColumn,
    #[error("column literal: columns have differing lengths")]
    RaggedColumns,
    #[error("graph literal: expected \"<n>;u-v,u-v,...\"")]
    BadGraphShape,
    #[error("graph literal: vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("graph literal: loop at vertex {0}")]
    LoopEdge(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
