use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::words::WordMode;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("word mode mismatch: expected {expected:?}, found {found:?}")]
    ModeMismatch { expected: WordMode, found: WordMode },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("operator index {index} out of range for a simplex of degree {degree}")]
    IndexOutOfRange { index: usize, degree: usize },
    #[error("resource bound exceeded: {what} reached {count} (cap {cap})")]
    ResourceBound { what: String, count: usize, cap: usize },
    #[error("degree {degree} out of range: complex computed up to degree {max}")]
    DegreeOutOfRange { degree: usize, max: usize },
    #[error("boundary does not square to zero in degree {degree}")]
    BoundaryNotNilpotent { degree: usize },
    #[error("not a chain map: {0}")]
    NotChainMap(String),
}
