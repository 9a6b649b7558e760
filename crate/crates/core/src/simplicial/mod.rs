//! Simplicial sets that are finite in each degree (after truncation), given
//! by enumeration, faces and degeneracies.
//!
//! Every builder models a quotient by a free right action of the
//! augmentation group `G`: word-based specs drop the tail of a normal form,
//! the coskeleton normalizes its last vertex to the identity.

mod coskeleton;
mod envelope;
mod identities;
mod map;
mod nerve;

pub use coskeleton::{build_coskeleton, Coskeleton, MatchingFamily};
pub use envelope::{build_clauwens, build_envelope, EnvelopeSource, WordSpec};
pub use identities::{check_simplicial_identities, IdentityReport};
pub use map::{canonical_to_coskeleton, CanonicalToCoskeleton, SimplicialMap};
pub use nerve::{build_nerve, Nerve};

use std::fmt::Debug;
use std::hash::Hash;

use crate::{Error, Result};

/// Default bound on the number of simplices enumerated in one degree.
pub const DEFAULT_SIMPLEX_CAP: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpecKind {
    Envelope,
    Clauwens,
    Coskeleton,
    Nerve,
}

pub trait SimplicialSet {
    type Simplex: Clone + Eq + Hash + Debug;

    fn kind(&self) -> SpecKind;

    fn degree(&self, simplex: &Self::Simplex) -> usize;

    /// All simplices of `degree` (degenerate ones included) whose weight is at
    /// most `max_length`, in canonical order. Builders that are finite per
    /// degree ignore `max_length`.
    fn enumerate(
        &self,
        degree: usize,
        max_length: usize,
        cap: usize,
    ) -> Result<Vec<Self::Simplex>>;

    fn face(&self, i: usize, simplex: &Self::Simplex) -> Result<Self::Simplex>;

    fn degeneracy(&self, i: usize, simplex: &Self::Simplex) -> Result<Self::Simplex>;

    /// Text form used as a chain-basis label.
    fn encode(&self, simplex: &Self::Simplex) -> String;

    /// Truncation measure (letter count for words).
    fn weight(&self, _simplex: &Self::Simplex) -> usize {
        0
    }

    /// `σ` is degenerate iff `σ = s_i d_i σ` for some `i < degree`.
    fn is_degenerate(&self, simplex: &Self::Simplex) -> bool {
        let k = self.degree(simplex);
        (0..k).any(|i| {
            self.face(i, simplex)
                .and_then(|f| self.degeneracy(i, &f))
                .map(|s| &s == simplex)
                .unwrap_or(false)
        })
    }
}

/// `enumerate` under its operation name.
pub fn enumerate_simplices<S: SimplicialSet>(
    spec: &S,
    degree: usize,
    max_length: usize,
    cap: usize,
) -> Result<Vec<S::Simplex>> {
    spec.enumerate(degree, max_length, cap)
}

/// The nondegenerate simplices of one degree, in canonical order.
pub fn nondegenerate_simplices<S: SimplicialSet>(
    spec: &S,
    degree: usize,
    max_length: usize,
    cap: usize,
) -> Result<Vec<S::Simplex>> {
    let mut all = spec.enumerate(degree, max_length, cap)?;
    all.retain(|s| !spec.is_degenerate(s));
    Ok(all)
}

/// Sorts by (weight, encoding).
pub(crate) fn sort_canonical<S: SimplicialSet>(spec: &S, simplices: Vec<S::Simplex>) -> Vec<S::Simplex> {
    let mut keyed: Vec<((usize, String), S::Simplex)> = simplices
        .into_iter()
        .map(|s| ((spec.weight(&s), spec.encode(&s)), s))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, s)| s).collect()
}

pub(crate) fn check_face_index(i: usize, degree: usize) -> Result<()> {
    if degree == 0 || i > degree {
        Err(Error::IndexOutOfRange { index: i, degree })
    } else {
        Ok(())
    }
}

pub(crate) fn check_degeneracy_index(i: usize, degree: usize) -> Result<()> {
    if i > degree {
        Err(Error::IndexOutOfRange { index: i, degree })
    } else {
        Ok(())
    }
}

pub(crate) fn resource_bound(what: &str, count: usize, cap: usize) -> Error {
    Error::ResourceBound { what: what.to_string(), count, cap }
}
