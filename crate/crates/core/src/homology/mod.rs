//! Normalized chain complexes and exact homology over `Z`, `Q` and `GF(p)`.

mod complex;
mod field;
mod groups;
mod induced;
mod matrix;
mod snf;

pub use complex::{chain_complex, simplicial_chains, Caps, ChainComplex, SimplicialChains, DEFAULT_MATRIX_CAP};
pub use field::{is_prime, rank_mod_p};
pub use groups::{homology, homology_range, Coefficients, HomologyGroup};
pub use induced::{chain_map_matrix, homology_basis, induced_map, HomologyBasis, InducedMap};
pub use matrix::{DenseMatrix, SparseIntMatrix};
pub use snf::{
    invariant_factors_of_diagonal, smith_normal_form, smith_normal_form_with_transforms, SmithDecomposition,
    SmithForm,
};
