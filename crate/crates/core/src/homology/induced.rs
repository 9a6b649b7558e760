use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::complex::{ChainComplex, SimplicialChains};
use super::groups::{Coefficients, HomologyGroup};
use super::matrix::{DenseMatrix, SparseIntMatrix};
use super::snf::smith_normal_form_with_transforms;
use crate::simplicial::{SimplicialMap, SimplicialSet};
use crate::{Error, Result};

/// Integral `H_m` with explicit cycle representatives.
///
/// Generators are ordered torsion first (in the order of
/// `group.torsion`), then free.
#[derive(Clone, Debug)]
pub struct HomologyBasis {
    pub group: HomologyGroup,
    /// Cycle representatives in the chain basis of degree `m`.
    pub generators: Vec<Vec<BigInt>>,
    /// Order of each generator, zero for free ones.
    pub orders: Vec<BigInt>,
    /// Maps a cycle to its coordinates (before reduction mod `orders`).
    coordinates: DenseMatrix,
}

impl HomologyBasis {
    /// Coordinates of the class of a cycle, torsion entries reduced to
    /// `0..order`.
    pub fn coordinates(&self, cycle: &[BigInt]) -> Vec<BigInt> {
        self.coordinates
            .mul_vec(cycle)
            .into_iter()
            .zip(&self.orders)
            .map(|(c, o)| if o.is_zero() { c } else { c.mod_floor(o) })
            .collect()
    }
}

pub fn homology_basis(c: &ChainComplex, m: usize) -> Result<HomologyBasis> {
    if m + 1 > c.max_degree() {
        return Err(Error::DegreeOutOfRange { degree: m, max: c.max_degree().saturating_sub(1) });
    }
    let n = c.dim(m);
    let dm = smith_normal_form_with_transforms(&c.boundary(m).to_dense());
    let r = dm.rank();
    let kernel = |i: usize| dm.v.column(r + i);
    let to_kernel = dm.v_inv.row_slice(r..n);

    let b = to_kernel.mul(&c.boundary(m + 1).to_dense());
    let db = smith_normal_form_with_transforms(&b);
    let rb = db.rank();
    let diag = db.diagonal();

    let mut generators = Vec::new();
    let mut orders = Vec::new();
    let mut rows = Vec::new();
    for i in 0..n - r {
        let order = if i < rb { diag[i].clone() } else { BigInt::zero() };
        if order.is_one() {
            continue;
        }
        // Generator i is column i of P^-1 in kernel coordinates.
        let mut z = vec![BigInt::zero(); n];
        for (j, coeff) in db.u_inv.column(i).iter().enumerate() {
            if !coeff.is_zero() {
                for (zk, kk) in z.iter_mut().zip(kernel(j)) {
                    *zk += coeff * kk;
                }
            }
        }
        generators.push(z);
        orders.push(order);
        rows.push(i);
    }
    let p_rows = DenseMatrix {
        rows: rows.len(),
        cols: n - r,
        data: rows.iter().map(|&i| db.u.data[i].clone()).collect(),
    };
    let coordinates = p_rows.mul(&to_kernel);
    let torsion: Vec<BigInt> = orders.iter().filter(|o| !o.is_zero()).cloned().collect();
    let betti = orders.len() - torsion.len();
    let group = HomologyGroup { degree: m, coefficients: Coefficients::Integers, betti, torsion };
    Ok(HomologyBasis { group, generators, orders, coordinates })
}

/// Matrix of `f_*: H_m(source) → H_m(target)` in the computed generators.
#[derive(Clone, Debug)]
pub struct InducedMap {
    pub degree: usize,
    pub source: HomologyGroup,
    pub target: HomologyGroup,
    /// `matrix[i][j]`: coordinate `i` of the image of source generator `j`.
    pub matrix: Vec<Vec<BigInt>>,
    target_orders: Vec<BigInt>,
}

impl InducedMap {
    /// Same invariants on both sides and trivial cokernel (finitely
    /// generated abelian groups are Hopfian, so that suffices).
    pub fn is_isomorphism(&self) -> bool {
        if !self.source.same_group(&self.target) {
            return false;
        }
        let n = self.target_orders.len();
        let cols = self.matrix.first().map_or(0, Vec::len);
        let mut m = DenseMatrix::zeros(n, cols + n);
        for i in 0..n {
            for j in 0..cols {
                m.data[i][j] = self.matrix[i][j].clone();
            }
            m.data[i][cols + i] = self.target_orders[i].clone();
        }
        let d = smith_normal_form_with_transforms(&m).diagonal();
        d.len() == n && d.iter().all(One::is_one)
    }

    pub fn matrix_string(&self) -> String {
        let rows: Vec<String> = self
            .matrix
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            .collect();
        format!("[{}]", rows.join("; "))
    }
}

/// Chain-level matrix of a simplicial map in degree `k`; degenerate images
/// vanish.
pub fn chain_map_matrix<F: SimplicialMap>(
    f: &F,
    source: &SimplicialChains<<F::Source as SimplicialSet>::Simplex>,
    target: &SimplicialChains<<F::Target as SimplicialSet>::Simplex>,
    k: usize,
) -> Result<SparseIntMatrix> {
    let mut triplets = Vec::new();
    for (col, s) in source.simplices[k].iter().enumerate() {
        let image = f.apply(s)?;
        if f.target().is_degenerate(&image) {
            continue;
        }
        let row = target.index_of(k, &image).ok_or_else(|| {
            Error::NotChainMap(format!("image {} outside the target basis", f.target().encode(&image)))
        })?;
        triplets.push((row, col, 1));
    }
    Ok(SparseIntMatrix::from_triplets(target.complex.dim(k), source.complex.dim(k), triplets))
}

pub fn induced_map<F: SimplicialMap>(
    f: &F,
    source: &SimplicialChains<<F::Source as SimplicialSet>::Simplex>,
    target: &SimplicialChains<<F::Target as SimplicialSet>::Simplex>,
    m: usize,
) -> Result<InducedMap> {
    let top = m + 1;
    if top > source.complex.max_degree() || top > target.complex.max_degree() {
        return Err(Error::DegreeOutOfRange { degree: m, max: source.complex.max_degree().min(target.complex.max_degree()) });
    }
    let maps: Vec<SparseIntMatrix> =
        (0..=top).map(|k| chain_map_matrix(f, source, target, k)).collect::<Result<_>>()?;
    for k in 1..=top {
        let lhs = target.complex.boundary(k).mul(&maps[k]).expect("shapes");
        let rhs = maps[k - 1].mul(source.complex.boundary(k)).expect("shapes");
        if lhs != rhs {
            return Err(Error::NotChainMap(format!("boundary not preserved in degree {k}")));
        }
    }

    let src = homology_basis(&source.complex, m)?;
    let tgt = homology_basis(&target.complex, m)?;
    let fm = maps[m].to_dense();
    let columns: Vec<Vec<BigInt>> = src.generators.iter().map(|z| tgt.coordinates(&fm.mul_vec(z))).collect();
    let matrix = (0..tgt.orders.len()).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect();
    Ok(InducedMap { degree: m, source: src.group, target: tgt.group, matrix, target_orders: tgt.orders })
}
