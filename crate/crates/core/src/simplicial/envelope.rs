use super::{
    check_degeneracy_index, check_face_index, resource_bound, sort_canonical, SimplicialSet,
    SpecKind,
};
use crate::algebra::{AugmentedRack, PreCrossedModule};
use crate::words::{EnvelopeWord, Item, Letter, WordAlgebra, WordMode};
use crate::{Error, Result};

/// Input to [`build_envelope`].
#[derive(Clone, Copy, Debug)]
pub enum EnvelopeSource<'a> {
    PreCrossed(&'a PreCrossedModule),
    AugmentedRack(&'a AugmentedRack),
}

/// Quotient by `G` of a word-based simplicial group or monoid: the envelope
/// `E_*(X,G,π)/G` or the Clauwens quotient `C_*/G`.
///
/// Simplices are normal-form words with trivial tail.
#[derive(Clone, Debug)]
pub struct WordSpec {
    kind: SpecKind,
    algebra: WordAlgebra,
}

/// The universal simplicial envelope modulo `G`.
///
/// Group-syllable words need a pre-crossed module. Free-letter words model
/// the pre-crossed module `F(X) → G` on an augmented rack (a pre-crossed
/// module is read as its underlying augmented rack).
pub fn build_envelope(source: EnvelopeSource<'_>, mode: WordMode) -> Result<WordSpec> {
    let algebra = match (source, mode) {
        (EnvelopeSource::PreCrossed(p), WordMode::GroupSyllable) => WordAlgebra::group_syllable(p),
        (EnvelopeSource::PreCrossed(p), WordMode::FreeLetter) => {
            WordAlgebra::free_letter(&p.as_augmented_rack())
        }
        (EnvelopeSource::AugmentedRack(a), WordMode::FreeLetter) => WordAlgebra::free_letter(a),
        (EnvelopeSource::AugmentedRack(_), WordMode::GroupSyllable) => {
            return Err(Error::ModeMismatch { expected: WordMode::FreeLetter, found: mode })
        }
        (_, WordMode::MonoidLetter) => {
            return Err(Error::ModeMismatch { expected: WordMode::FreeLetter, found: mode })
        }
    };
    Ok(WordSpec { kind: SpecKind::Envelope, algebra })
}

/// The simplicial Clauwens monoid modulo `G`, whose realization is the rack
/// space.
pub fn build_clauwens(a: &AugmentedRack) -> WordSpec {
    WordSpec { kind: SpecKind::Clauwens, algebra: WordAlgebra::monoid_letter(a) }
}

impl WordSpec {
    pub fn algebra(&self) -> &WordAlgebra {
        &self.algebra
    }

    pub fn mode(&self) -> WordMode {
        self.algebra.mode()
    }

    /// Face map on the simplicial group itself (tails kept).
    ///
    /// Faces are homomorphisms, so they act letter by letter; the result is
    /// then put back into normal form.
    pub fn face_full(&self, i: usize, word: &EnvelopeWord) -> Result<EnvelopeWord> {
        let k = word.degree;
        check_face_index(i, k)?;
        let items = word
            .letters
            .iter()
            .filter_map(|&l| self.face_letter(i, k, l))
            .chain([Item::Group(word.tail)]);
        Ok(self.algebra.normalize_mixed(k - 1, items))
    }

    fn face_letter(&self, i: usize, k: usize, l: Letter) -> Option<Item> {
        let j = l.position;
        if i == 0 && j == 0 {
            None
        } else if j == k - 1 && i == k {
            Some(Item::Group(self.algebra.pi_letter(l)))
        } else if i > j {
            Some(Item::Letter(l))
        } else {
            Some(Item::Letter(Letter { position: j - 1, ..l }))
        }
    }

    /// Degeneracy map on the simplicial group itself (tails kept).
    pub fn degeneracy_full(&self, i: usize, word: &EnvelopeWord) -> Result<EnvelopeWord> {
        check_degeneracy_index(i, word.degree)?;
        let letters = word
            .letters
            .iter()
            .map(|&l| Letter { position: if i <= l.position { l.position + 1 } else { l.position }, ..l })
            .collect();
        Ok(EnvelopeWord { letters, degree: word.degree + 1, ..word.clone() })
    }

    fn drop_tail(&self, mut word: EnvelopeWord) -> EnvelopeWord {
        word.tail = self.algebra.group().identity();
        word
    }
}

impl SimplicialSet for WordSpec {
    type Simplex = EnvelopeWord;

    fn kind(&self) -> SpecKind {
        self.kind
    }

    fn degree(&self, simplex: &EnvelopeWord) -> usize {
        simplex.degree
    }

    fn enumerate(&self, degree: usize, max_length: usize, cap: usize) -> Result<Vec<EnvelopeWord>> {
        let alphabet = self.algebra.alphabet(degree);
        let mut out = vec![self.algebra.identity_word(degree)];
        let mut frontier = out.clone();
        for _ in 0..max_length {
            let mut next = Vec::new();
            for w in &frontier {
                for &l in &alphabet {
                    if w.letters.last().is_some_and(|&prev| !self.algebra.may_follow(prev, l)) {
                        continue;
                    }
                    let mut letters = w.letters.clone();
                    letters.push(l);
                    next.push(EnvelopeWord { letters, ..w.clone() });
                    if out.len() + next.len() > cap {
                        return Err(resource_bound(
                            &format!("simplices in degree {degree}"),
                            out.len() + next.len(),
                            cap,
                        ));
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        Ok(sort_canonical(self, out))
    }

    fn face(&self, i: usize, simplex: &EnvelopeWord) -> Result<EnvelopeWord> {
        self.face_full(i, simplex).map(|w| self.drop_tail(w))
    }

    fn degeneracy(&self, i: usize, simplex: &EnvelopeWord) -> Result<EnvelopeWord> {
        self.degeneracy_full(i, simplex)
    }

    fn encode(&self, simplex: &EnvelopeWord) -> String {
        self.algebra.encode(simplex)
    }

    fn weight(&self, simplex: &EnvelopeWord) -> usize {
        simplex.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{validate_augmented_rack, FiniteGroup};
    use crate::simplicial::{nondegenerate_simplices, DEFAULT_SIMPLEX_CAP};

    fn z2_envelope() -> WordSpec {
        let p = PreCrossedModule::over_trivial_group(&FiniteGroup::cyclic(2));
        build_envelope(EnvelopeSource::PreCrossed(&p), WordMode::GroupSyllable).unwrap()
    }

    fn one_point_rack() -> AugmentedRack {
        validate_augmented_rack(vec!["a".into()], FiniteGroup::cyclic(2), vec![vec![0, 0]], vec![1])
            .unwrap()
    }

    fn word(spec: &WordSpec, letters: &[(usize, usize)], degree: usize) -> EnvelopeWord {
        let letters = letters.iter().map(|&(b, j)| Letter::new(b, j)).collect();
        spec.algebra().reduce(letters, degree, spec.algebra().group().identity())
    }

    fn labels(spec: &WordSpec, words: &[EnvelopeWord]) -> Vec<String> {
        words.iter().map(|w| spec.encode(w)).collect()
    }

    #[test]
    fn z2_degree_two_nondegenerate() {
        let spec = z2_envelope();
        let nd = nondegenerate_simplices(&spec, 2, 2, DEFAULT_SIMPLEX_CAP).unwrap();
        assert_eq!(labels(&spec, &nd), vec!["(1@0)(1@1)", "(1@1)(1@0)"]);
    }

    #[test]
    fn trivial_x_is_a_point() {
        let p = PreCrossedModule::over_trivial_group(&FiniteGroup::trivial());
        let spec = build_envelope(EnvelopeSource::PreCrossed(&p), WordMode::GroupSyllable).unwrap();
        for k in 0..4 {
            let all = spec.enumerate(k, 3, DEFAULT_SIMPLEX_CAP).unwrap();
            assert_eq!(all.len(), 1);
            assert_eq!(spec.is_degenerate(&all[0]), k > 0);
        }
    }

    #[test]
    fn free_letter_degree_one() {
        let a = one_point_rack();
        let spec = build_envelope(EnvelopeSource::AugmentedRack(&a), WordMode::FreeLetter).unwrap();
        let nd = nondegenerate_simplices(&spec, 1, 2, DEFAULT_SIMPLEX_CAP).unwrap();
        assert_eq!(labels(&spec, &nd), vec!["(a@0)", "(a^-1@0)", "(a@0)(a@0)", "(a^-1@0)(a^-1@0)"]);
    }

    #[test]
    fn rack_input_rejects_group_syllables() {
        let a = one_point_rack();
        assert!(matches!(
            build_envelope(EnvelopeSource::AugmentedRack(&a), WordMode::GroupSyllable),
            Err(Error::ModeMismatch { .. })
        ));
    }

    #[test]
    fn clauwens_one_point() {
        let a = one_point_rack();
        let spec = build_clauwens(&a);
        let nd = nondegenerate_simplices(&spec, 2, 2, DEFAULT_SIMPLEX_CAP).unwrap();
        assert_eq!(labels(&spec, &nd), vec!["(a@0)(a@1)", "(a@1)(a@0)"]);
        let deg1 = spec.enumerate(1, 1, DEFAULT_SIMPLEX_CAP).unwrap();
        assert_eq!(labels(&spec, &deg1), vec!["1", "(a@0)"]);
    }

    #[test]
    fn clauwens_empty_carrier() {
        let a = validate_augmented_rack(vec![], FiniteGroup::cyclic(2), vec![], vec![]).unwrap();
        let spec = build_clauwens(&a);
        for k in 0..4 {
            assert_eq!(spec.enumerate(k, 3, DEFAULT_SIMPLEX_CAP).unwrap().len(), 1);
        }
    }

    #[test]
    fn face_examples() {
        let spec = z2_envelope();
        let x = word(&spec, &[(1, 0)], 1);
        assert!(spec.face(0, &x).unwrap().is_empty());

        let w = word(&spec, &[(1, 0), (1, 1)], 2);
        assert!(spec.face(1, &w).unwrap().is_empty());
        assert_eq!(spec.encode(&spec.face(0, &w).unwrap()), "(1@0)");
        assert_eq!(spec.encode(&spec.face(2, &w).unwrap()), "(1@0)");
        assert!(matches!(spec.face(3, &w), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn last_face_pushes_pi_through() {
        let g = FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap().0;
        let p = PreCrossedModule::identity_conjugation(&g);
        let spec = build_envelope(EnvelopeSource::PreCrossed(&p), WordMode::GroupSyllable).unwrap();
        let (x, y) = (g.index_of("p120").unwrap(), g.index_of("p102").unwrap());
        let w = word(&spec, &[(y, 1), (x, 0)], 2);
        let f = spec.face(2, &w).unwrap();
        // y at the top position becomes π(y) = y and is pushed past (x@0).
        let conj = p.action().act(x, g.inv(y));
        assert_eq!(f.letters, vec![Letter::new(conj, 0)]);
        assert_ne!(conj, x);
    }

    #[test]
    fn degeneracy_examples() {
        let spec = z2_envelope();
        let t = word(&spec, &[(1, 0)], 1);
        assert_eq!(spec.encode(&spec.degeneracy(0, &t).unwrap()), "(1@1)");
        assert_eq!(spec.encode(&spec.degeneracy(1, &t).unwrap()), "(1@0)");
        let base = spec.algebra().identity_word(1);
        assert!(spec.degeneracy(1, &base).unwrap().is_empty());
        assert!(spec.degeneracy(2, &t).is_err());
    }

    #[test]
    fn degeneracy_detection() {
        let spec = z2_envelope();
        assert!(spec.is_degenerate(&word(&spec, &[(1, 1)], 2)));
        assert!(!spec.is_degenerate(&word(&spec, &[(1, 0), (1, 1)], 2)));
        for k in 1..4 {
            assert!(spec.is_degenerate(&spec.algebra().identity_word(k)));
        }
    }

    #[test]
    fn degree_three_count() {
        let spec = z2_envelope();
        assert_eq!(spec.enumerate(3, 2, DEFAULT_SIMPLEX_CAP).unwrap().len(), 10);
        assert!(matches!(spec.enumerate(3, 2, 5), Err(Error::ResourceBound { .. })));
    }

    /// Nondegenerate words are exactly those using every position.
    #[test]
    fn nondegenerate_iff_all_positions_used() {
        let a = one_point_rack();
        let spec = build_envelope(EnvelopeSource::AugmentedRack(&a), WordMode::FreeLetter).unwrap();
        for k in 1..4 {
            for w in spec.enumerate(k, 3, DEFAULT_SIMPLEX_CAP).unwrap() {
                let all_used = (0..k).all(|j| w.letters.iter().any(|l| l.position == j));
                assert_eq!(spec.is_degenerate(&w), !all_used, "{}", spec.encode(&w));
            }
        }
    }
}
