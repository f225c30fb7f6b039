use thiserror::Error;

use crate::lattice::Point;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("polygon needs at least three non-collinear vertices")]
    Degenerate,
    #[error("point {0} is not a vertex of the convex hull of the input")]
    NotAVertex(Point),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(Point),
    #[error("matrix has determinant {0}, expected +1 or -1")]
    NotUnimodular(i128),
    #[error("{0}")]
    Precondition(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("illegal move ({0}, {1})")]
    IllegalMove(Point, Point),
    #[error("invalid legal loop: {0}")]
    InvalidLoop(String),
    #[error("{0} is not prime (or exceeds 2^16)")]
    NotPrime(u64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("unsupported genus {0}: {1}")]
    UnsupportedGenus(usize, String),
}
