use std::collections::HashMap;

use super::matrix::SparseIntMatrix;
use crate::simplicial::{nondegenerate_simplices, SimplicialSet, DEFAULT_SIMPLEX_CAP};
use crate::{Error, Result};

/// Default bound on either dimension of a boundary matrix.
pub const DEFAULT_MATRIX_CAP: usize = 5_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub simplices: usize,
    pub matrix_dim: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self { simplices: DEFAULT_SIMPLEX_CAP, matrix_dim: DEFAULT_MATRIX_CAP }
    }
}

/// Free chain complex `C_0 ← C_1 ← ... ← C_max` with labelled bases.
///
/// `boundary(k)` is `∂_k: C_k → C_{k-1}` as a `dim C_{k-1} × dim C_k`
/// matrix; `∂_0` is the zero map to the zero module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    bases: Vec<Vec<String>>,
    boundaries: Vec<SparseIntMatrix>,
}

impl ChainComplex {
    /// Checks shapes and `∂_{k-1} ∂_k = 0` for every `k`.
    pub fn new(bases: Vec<Vec<String>>, boundaries: Vec<SparseIntMatrix>) -> Result<Self> {
        assert_eq!(bases.len(), boundaries.len(), "one boundary per degree");
        for (k, d) in boundaries.iter().enumerate() {
            let rows = if k == 0 { 0 } else { bases[k - 1].len() };
            assert_eq!((d.rows(), d.cols()), (rows, bases[k].len()), "shape of boundary {k}");
        }
        for k in 2..boundaries.len() {
            let dd = boundaries[k - 1].mul(&boundaries[k]).expect("shapes chain");
            if !dd.is_zero() {
                return Err(Error::BoundaryNotNilpotent { degree: k });
            }
        }
        Ok(Self { bases, boundaries })
    }

    pub fn max_degree(&self) -> usize {
        self.bases.len() - 1
    }

    pub fn basis(&self, k: usize) -> &[String] {
        &self.bases[k]
    }

    pub fn dim(&self, k: usize) -> usize {
        self.bases[k].len()
    }

    pub fn boundary(&self, k: usize) -> &SparseIntMatrix {
        &self.boundaries[k]
    }
}

/// Normalized chains of a simplicial set together with the simplices that
/// index each basis.
#[derive(Clone, Debug)]
pub struct SimplicialChains<T> {
    pub complex: ChainComplex,
    pub simplices: Vec<Vec<T>>,
    index: Vec<HashMap<T, usize>>,
}

impl<T: Clone + Eq + std::hash::Hash> SimplicialChains<T> {
    pub fn index_of(&self, degree: usize, simplex: &T) -> Option<usize> {
        self.index.get(degree)?.get(simplex).copied()
    }
}

/// Normalized chain complex in degrees `0..=m_max + 1`: the basis in each
/// degree is the nondegenerate simplices of weight `<= max_length`, and
/// `∂ = Σ (-1)^i d_i` with degenerate faces dropped.
pub fn chain_complex<S: SimplicialSet>(spec: &S, m_max: usize, max_length: usize) -> Result<ChainComplex> {
    simplicial_chains(spec, m_max + 1, max_length, Caps::default()).map(|c| c.complex)
}

/// As [`chain_complex`], up to `max_degree` inclusive, with explicit caps.
pub fn simplicial_chains<S: SimplicialSet>(
    spec: &S,
    max_degree: usize,
    max_length: usize,
    caps: Caps,
) -> Result<SimplicialChains<S::Simplex>> {
    let mut simplices = Vec::with_capacity(max_degree + 1);
    let mut index = Vec::with_capacity(max_degree + 1);
    for k in 0..=max_degree {
        let basis = nondegenerate_simplices(spec, k, max_length, caps.simplices)?;
        if basis.len() > caps.matrix_dim {
            return Err(Error::ResourceBound {
                what: format!("chain basis in degree {k}"),
                count: basis.len(),
                cap: caps.matrix_dim,
            });
        }
        index.push(basis.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect::<HashMap<_, _>>());
        simplices.push(basis);
    }

    let mut boundaries = vec![SparseIntMatrix::zeros(0, simplices[0].len())];
    for k in 1..=max_degree {
        let mut triplets = Vec::new();
        for (col, s) in simplices[k].iter().enumerate() {
            for i in 0..=k {
                let f = spec.face(i, s)?;
                if spec.is_degenerate(&f) {
                    continue;
                }
                let row = *index[k - 1].get(&f).ok_or_else(|| Error::ResourceBound {
                    what: format!("face {} of {} outside the truncation", i, spec.encode(s)),
                    count: spec.weight(&f),
                    cap: max_length,
                })?;
                triplets.push((row, col, if i % 2 == 0 { 1 } else { -1 }));
            }
        }
        boundaries.push(SparseIntMatrix::from_triplets(simplices[k - 1].len(), simplices[k].len(), triplets));
    }

    let bases = simplices.iter().map(|b| b.iter().map(|s| spec.encode(s)).collect()).collect();
    let complex = ChainComplex::new(bases, boundaries)?;
    Ok(SimplicialChains { complex, simplices, index })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{validate_augmented_rack, FiniteGroup, PreCrossedModule};
    use crate::simplicial::{build_clauwens, build_envelope, EnvelopeSource};
    use crate::words::WordMode;

    #[test]
    fn z2_envelope_boundaries() {
        let p = PreCrossedModule::over_trivial_group(&FiniteGroup::cyclic(2));
        let spec = build_envelope(EnvelopeSource::PreCrossed(&p), WordMode::GroupSyllable).unwrap();
        let c = chain_complex(&spec, 1, 2).unwrap();
        assert_eq!((c.dim(0), c.dim(1), c.dim(2)), (1, 1, 2));
        assert_eq!(c.basis(2), ["(1@0)(1@1)", "(1@1)(1@0)"]);
        // d_0 and d_2 both give (1@0); d_1 collapses to the basepoint.
        assert_eq!(c.boundary(2).entries(), &[(0, 0, 2), (0, 1, 2)]);
        assert!(c.boundary(1).is_zero());
    }

    #[test]
    fn one_point_clauwens() {
        let a = validate_augmented_rack(vec!["a".into()], FiniteGroup::trivial(), vec![vec![0]], vec![0]).unwrap();
        let c = chain_complex(&build_clauwens(&a), 2, 3).unwrap();
        // Words like (a@0)(a@1) have d_1 = (a@0)(a@0), so ∂ is not zero on
        // the nose; only the homology is that of one cell per dimension.
        assert!(c.boundary(1).is_zero());
        assert!(!c.boundary(2).is_zero());
        let h = crate::homology::homology_range(&c, 2, crate::homology::Coefficients::Integers).unwrap();
        assert!(h.iter().all(|g| g.group_string() == "Z"), "{h:?}");
    }

    #[test]
    fn first_boundary_is_d0_minus_d1() {
        let g = FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap().0;
        let nerve = crate::simplicial::build_nerve(&g);
        let chains = simplicial_chains(&nerve, 1, 0, Caps::default()).unwrap();
        // One vertex: d_0 - d_1 = 0 on every edge.
        assert!(chains.complex.boundary(1).is_zero());
        assert_eq!(chains.complex.dim(1), 5);
    }

    #[test]
    fn non_nilpotent_boundary_rejected() {
        let bases = vec![vec!["v".into()], vec!["e".into()], vec!["f".into()]];
        let d1 = SparseIntMatrix::from_dense(&[vec![1]]);
        let d2 = SparseIntMatrix::from_dense(&[vec![1]]);
        let err = ChainComplex::new(bases, vec![SparseIntMatrix::zeros(0, 1), d1, d2]).unwrap_err();
        assert_eq!(err, Error::BoundaryNotNilpotent { degree: 2 });
    }

    #[test]
    fn matrix_cap() {
        let p = PreCrossedModule::over_trivial_group(&FiniteGroup::cyclic(3));
        let spec = build_envelope(EnvelopeSource::PreCrossed(&p), WordMode::GroupSyllable).unwrap();
        let caps = Caps { simplices: 1_000, matrix_dim: 3 };
        assert!(matches!(simplicial_chains(&spec, 2, 2, caps), Err(Error::ResourceBound { .. })));
    }
}
