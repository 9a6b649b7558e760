//! Finite presentations of groups, actions, racks, augmented racks and
//! pre-crossed modules, each validated against its axioms on construction.
//!
//! Elements are plain `usize` indices into explicit tables. All objects are
//! immutable once validated.

mod action;
mod augmented;
mod group;
mod rack;

pub use action::RightAction;
pub use augmented::{
    conjugation_structure, precrossed_action, validate_augmented_rack, validate_precrossed,
    AugmentedRack, PreCrossedAction, PreCrossedModule,
};
pub use group::{validate_group, FiniteGroup};
pub use rack::{validate_rack, Rack};

use thiserror::Error;

/// Axiom violations reported by the validators in this module.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("table entry {value} out of range (size {bound})")]
    EntryOutOfRange { value: usize, bound: usize },
    #[error("{what}: expected size {expected}, found {found}")]
    SizeMismatch { what: &'static str, expected: usize, found: usize },
    #[error("table is not a Latin square: {line} repeats an entry")]
    NotLatinSquare { line: String },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("multiplication is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("right multiplication by {y} is not a bijection")]
    NotBijective { y: usize },
    #[error("self-distributivity fails at ({x},{y},{z})")]
    NotSelfDistributive { x: usize, y: usize, z: usize },
    #[error("invalid action: {0}")]
    ActionInvalid(String),
    #[error("pi is not equivariant: pi({x}^{g}) != {g}^-1 pi({x}) {g}")]
    NotEquivariant { x: usize, g: usize },
    #[error("pi is not a homomorphism: pi({a}*{b}) != pi({a}) pi({b})")]
    NotHomomorphism { a: usize, b: usize },
    #[error("action is not by automorphisms: ({x}*{y})^{g} != {x}^{g} * {y}^{g}")]
    NotByAutomorphisms { x: usize, y: usize, g: usize },
    #[error("subset is not closed under conjugation: {element}^{by} leaves it")]
    NotClosed { element: usize, by: usize },
    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),
}

pub(crate) fn check_entries(table: &[Vec<usize>], bound: usize) -> Result<(), AlgebraError> {
    for row in table {
        if let Some(&value) = row.iter().find(|&&v| v >= bound) {
            return Err(AlgebraError::EntryOutOfRange { value, bound });
        }
    }
    Ok(())
}

pub(crate) fn check_square(table: &[Vec<usize>]) -> Result<(), AlgebraError> {
    let n = table.len();
    for (row, r) in table.iter().enumerate() {
        if r.len() != n {
            return Err(AlgebraError::NotSquare { row, len: r.len(), expected: n });
        }
    }
    Ok(())
}
