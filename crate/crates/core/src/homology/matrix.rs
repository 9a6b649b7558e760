use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Sparse integer matrix in coordinate form, sorted column-major.
///
/// No duplicate coordinates and no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseIntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, i64)>,
}

impl SparseIntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: Vec::new() }
    }

    /// Sums duplicate coordinates and drops zeros.
    ///
    /// # Panics
    /// On out-of-range coordinates or if a summed entry overflows `i64`.
    pub fn from_triplets(rows: usize, cols: usize, triplets: impl IntoIterator<Item = (usize, usize, i64)>) -> Self {
        let mut acc: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "entry ({r},{c}) outside {rows}x{cols}");
            let e = acc.entry((c, r)).or_insert(0);
            *e = e.checked_add(v).expect("matrix entry overflow");
        }
        let entries = acc.into_iter().filter(|&(_, v)| v != 0).map(|((c, r), v)| (r, c, v)).collect();
        Self { rows, cols, entries }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_triplets(
            rows.len(),
            cols,
            rows.iter().enumerate().flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &v)| (r, c, v))),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// `(row, col, value)` triplets, column-major.
    pub fn entries(&self) -> &[(usize, usize, i64)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries
            .binary_search_by(|&(r, c, _)| (c, r).cmp(&(col, row)))
            .map_or(0, |i| self.entries[i].2)
    }

    /// Entries of one column as `(row, value)`.
    pub fn column(&self, col: usize) -> &[(usize, usize, i64)] {
        let start = self.entries.partition_point(|&(_, c, _)| c < col);
        let end = self.entries.partition_point(|&(_, c, _)| c <= col);
        &self.entries[start..end]
    }

    /// Exact product, or `None` when the dimensions do not chain.
    pub fn mul(&self, rhs: &SparseIntMatrix) -> Option<SparseIntMatrix> {
        if self.cols != rhs.rows {
            return None;
        }
        let mut triplets = Vec::new();
        for c in 0..rhs.cols {
            let mut acc: BTreeMap<usize, i128> = BTreeMap::new();
            for &(k, _, v) in rhs.column(c) {
                for &(r, _, w) in self.column(k) {
                    *acc.entry(r).or_insert(0) += i128::from(v) * i128::from(w);
                }
            }
            for (r, v) in acc {
                let v = i64::try_from(v).expect("product entry overflow");
                triplets.push((r, c, v));
            }
        }
        Some(Self::from_triplets(self.rows, rhs.cols, triplets))
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let mut m = DenseMatrix::zeros(self.rows, self.cols);
        for &(r, c, v) in &self.entries {
            m.data[r][c] = BigInt::from(v);
        }
        m
    }

    /// Applies a permutation to rows and columns: entry `(r, c)` moves to
    /// `(row_perm[r], col_perm[c])`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> SparseIntMatrix {
        Self::from_triplets(
            self.rows,
            self.cols,
            self.entries.iter().map(|&(r, c, v)| (row_perm[r], col_perm[c], v)),
        )
    }
}

/// Dense matrix over the integers with arbitrary precision entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<BigInt>>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![vec![BigInt::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = BigInt::one();
        }
        m
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self {
            rows: rows.len(),
            cols,
            data: rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect(),
        }
    }

    pub fn mul(&self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    if !rhs.data[k][j].is_zero() {
                        out.data[i][j] += a * &rhs.data[k][j];
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        self.data
            .iter()
            .map(|row| row.iter().zip(v).filter(|(a, _)| !a.is_zero()).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Rows `range` as a new matrix.
    pub fn row_slice(&self, range: std::ops::Range<usize>) -> DenseMatrix {
        DenseMatrix { rows: range.len(), cols: self.cols, data: self.data[range].to_vec() }
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        self.data.iter().map(|r| r[c].clone()).collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.data[i][j].is_zero()))
    }
}
