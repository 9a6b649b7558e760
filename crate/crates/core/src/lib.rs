//! Pre-crossed homology of finite pre-crossed modules.
//!
//! The crate builds the universal simplicial envelope of a pre-crossed
//! module (or of the free pre-crossed module on an augmented rack), takes the
//! quotient by the augmentation group and computes its homology with exact
//! integer linear algebra. Independent routes (the classical rack complex,
//! the bar complex of a group, the 1-coskeleton, the simplicial Clauwens
//! monoid and tensor-algebra dimension counts) live alongside so that the
//! identification theorems can be checked numerically.

pub mod algebra;
mod error;
pub mod homology;
pub mod oracles;
pub mod simplicial;
pub mod words;

pub use error::{Error, Result};
