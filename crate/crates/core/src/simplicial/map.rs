use super::{build_coskeleton, build_envelope, Coskeleton, EnvelopeSource, MatchingFamily, SimplicialSet, WordSpec};
use crate::algebra::PreCrossedModule;
use crate::words::{EnvelopeWord, WordMode};
use crate::{Error, Result};

/// A degreewise map of simplicial sets.
pub trait SimplicialMap {
    type Source: SimplicialSet;
    type Target: SimplicialSet;

    fn source(&self) -> &Self::Source;

    fn target(&self) -> &Self::Target;

    fn apply(
        &self,
        simplex: &<Self::Source as SimplicialSet>::Simplex,
    ) -> Result<<Self::Target as SimplicialSet>::Simplex>;
}

/// The map `E_*/G → M_*/G` induced by the canonical map from the 1-skeleton
/// to the 1-coskeleton: a simplex goes to its family of vertices and edges.
#[derive(Clone, Debug)]
pub struct CanonicalToCoskeleton {
    envelope: WordSpec,
    coskeleton: Coskeleton,
}

pub fn canonical_to_coskeleton(p: &PreCrossedModule) -> CanonicalToCoskeleton {
    CanonicalToCoskeleton {
        envelope: build_envelope(EnvelopeSource::PreCrossed(p), WordMode::GroupSyllable)
            .expect("group-syllable envelope of a pre-crossed module"),
        coskeleton: build_coskeleton(p),
    }
}

impl CanonicalToCoskeleton {
    /// Applies the faces that delete every vertex outside `keep` (sorted),
    /// highest index first so that lower indices are stable.
    fn restrict(&self, word: &EnvelopeWord, keep: &[usize]) -> Result<EnvelopeWord> {
        let mut w = word.clone();
        for v in (0..=word.degree).rev() {
            if !keep.contains(&v) {
                w = self.envelope.face_full(v, &w)?;
            }
        }
        Ok(w)
    }
}

impl SimplicialMap for CanonicalToCoskeleton {
    type Source = WordSpec;
    type Target = Coskeleton;

    fn source(&self) -> &WordSpec {
        &self.envelope
    }

    fn target(&self) -> &Coskeleton {
        &self.coskeleton
    }

    fn apply(&self, simplex: &EnvelopeWord) -> Result<MatchingFamily> {
        let k = simplex.degree;
        let x_group = self.coskeleton.precrossed().x_group();
        let vertices = (0..=k)
            .map(|a| self.restrict(simplex, &[a]).map(|w| w.tail))
            .collect::<Result<Vec<_>>>()?;
        let mut edges = Vec::with_capacity(k * (k + 1) / 2);
        for a in 0..k {
            for b in a + 1..=k {
                let e = self.restrict(simplex, &[a, b])?;
                if e.tail != vertices[b] || e.letters.len() > 1 {
                    return Err(Error::NotChainMap(format!(
                        "edge ({a},{b}) of {} does not match its vertices",
                        self.envelope.encode(simplex)
                    )));
                }
                edges.push(e.letters.first().map_or(x_group.identity(), |l| l.base));
            }
        }
        let family = self.coskeleton.normalize(MatchingFamily { vertices, edges });
        debug_assert!(self.coskeleton.is_matching(&family));
        Ok(family)
    }
}
