//! Smith normal form over the integers.
//!
//! [`smith_normal_form`] diagonalizes a sparse matrix with unimodular row and
//! column operations and returns the invariant factors only. It first runs
//! on `i64` with checked arithmetic and restarts on [`BigInt`] if anything
//! overflows. [`smith_normal_form_with_transforms`] is a dense variant that
//! also records the unimodular transforms and their inverses.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{DenseMatrix, SparseIntMatrix};

/// Invariant factors `d_1 | d_2 | ... | d_r` of a matrix of rank `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub invariant_factors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

/// `U · M · V = D` with `U`, `V` unimodular and `D` in Smith normal form.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub d: DenseMatrix,
    pub u: DenseMatrix,
    pub u_inv: DenseMatrix,
    pub v: DenseMatrix,
    pub v_inv: DenseMatrix,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        (0..self.d.rows.min(self.d.cols)).take_while(|&i| !self.d.data[i][i].is_zero()).count()
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rank()).map(|i| self.d.data[i][i].clone()).collect()
    }
}

trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn from_i64(v: i64) -> Self;
    fn is_nil(&self) -> bool;
    fn cmp_magnitude(&self, other: &Self) -> Ordering;
    /// `self - q * other`, `None` on overflow.
    fn sub_mul(&self, q: &Self, other: &Self) -> Option<Self>;
    /// Quotient truncated toward zero.
    fn quotient(&self, d: &Self) -> Self;
    fn to_bigint(&self) -> BigInt;
}

impl Scalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn cmp_magnitude(&self, other: &Self) -> Ordering {
        self.unsigned_abs().cmp(&other.unsigned_abs())
    }
    fn sub_mul(&self, q: &Self, other: &Self) -> Option<Self> {
        q.checked_mul(*other).and_then(|p| self.checked_sub(p))
    }
    fn quotient(&self, d: &Self) -> Self {
        self / d
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn cmp_magnitude(&self, other: &Self) -> Ordering {
        self.magnitude().cmp(other.magnitude())
    }
    fn sub_mul(&self, q: &Self, other: &Self) -> Option<Self> {
        Some(self - q * other)
    }
    fn quotient(&self, d: &Self) -> Self {
        self / d
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

struct Overflow;

/// Row-major sparse storage with a column index, for in-place elimination.
struct Workspace<T> {
    rows: Vec<BTreeMap<usize, T>>,
    cols: Vec<BTreeSet<usize>>,
}

impl<T: Scalar> Workspace<T> {
    fn new(m: &SparseIntMatrix) -> Self {
        let mut rows = vec![BTreeMap::new(); m.rows()];
        let mut cols = vec![BTreeSet::new(); m.cols()];
        for &(r, c, v) in m.entries() {
            rows[r].insert(c, T::from_i64(v));
            cols[c].insert(r);
        }
        Self { rows, cols }
    }

    fn set(&mut self, r: usize, c: usize, v: T) {
        if v.is_nil() {
            self.rows[r].remove(&c);
            self.cols[c].remove(&r);
        } else {
            self.rows[r].insert(c, v);
            self.cols[c].insert(r);
        }
    }

    /// `row[target] -= q * row[source]`
    fn row_sub(&mut self, target: usize, q: &T, source: usize) -> Result<(), Overflow> {
        let src: Vec<(usize, T)> = self.rows[source].iter().map(|(&c, v)| (c, v.clone())).collect();
        for (c, v) in src {
            let cur = self.rows[target].get(&c).cloned().unwrap_or_else(|| T::from_i64(0));
            let new = cur.sub_mul(q, &v).ok_or(Overflow)?;
            self.set(target, c, new);
        }
        Ok(())
    }

    /// `col[target] -= q * col[source]`
    fn col_sub(&mut self, target: usize, q: &T, source: usize) -> Result<(), Overflow> {
        let src: Vec<usize> = self.cols[source].iter().copied().collect();
        for r in src {
            let v = self.rows[r][&source].clone();
            let cur = self.rows[r].get(&target).cloned().unwrap_or_else(|| T::from_i64(0));
            let new = cur.sub_mul(q, &v).ok_or(Overflow)?;
            self.set(r, target, new);
        }
        Ok(())
    }

    /// Smallest magnitude, then smallest Markowitz count, then position.
    fn choose_pivot(&self, candidates: impl Iterator<Item = (usize, usize)>) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for (r, c) in candidates {
            let better = match best {
                None => true,
                Some((br, bc)) => {
                    let v = &self.rows[r][&c];
                    let bv = &self.rows[br][&bc];
                    match v.cmp_magnitude(bv) {
                        Ordering::Less => true,
                        Ordering::Greater => false,
                        Ordering::Equal => self.markowitz(r, c) < self.markowitz(br, bc),
                    }
                }
            };
            if better {
                best = Some((r, c));
            }
        }
        best
    }

    fn markowitz(&self, r: usize, c: usize) -> usize {
        (self.rows[r].len() - 1) * (self.cols[c].len() - 1)
    }

    fn diagonalize(mut self) -> Result<Vec<BigInt>, Overflow> {
        let mut diagonal = Vec::new();
        loop {
            let all = self.rows.iter().enumerate().flat_map(|(r, row)| row.keys().map(move |&c| (r, c)));
            let Some((mut r, mut c)) = self.choose_pivot(all) else { break };
            loop {
                let p = self.rows[r][&c].clone();
                let mut remainder = false;
                let others: Vec<usize> = self.cols[c].iter().copied().filter(|&x| x != r).collect();
                for r2 in others {
                    let q = self.rows[r2][&c].quotient(&p);
                    if !q.is_nil() {
                        self.row_sub(r2, &q, r)?;
                    }
                    remainder |= self.rows[r2].contains_key(&c);
                }
                let others: Vec<usize> = self.rows[r].keys().copied().filter(|&x| x != c).collect();
                for c2 in others {
                    let q = self.rows[r][&c2].quotient(&p);
                    if !q.is_nil() {
                        self.col_sub(c2, &q, c)?;
                    }
                    remainder |= self.rows[r].contains_key(&c2);
                }
                if !remainder {
                    break;
                }
                let line = self.rows[r]
                    .keys()
                    .map(|&c2| (r, c2))
                    .chain(self.cols[c].iter().map(|&r2| (r2, c)))
                    .filter(|&(a, b)| (a, b) != (r, c))
                    .collect::<Vec<_>>();
                (r, c) = self.choose_pivot(line.into_iter()).expect("remainder present");
            }
            diagonal.push(self.rows[r][&c].to_bigint().abs());
            self.set(r, c, T::from_i64(0));
        }
        Ok(diagonal)
    }
}

/// Turns any nonzero diagonal into the divisibility chain with the same
/// cokernel, by repeated (gcd, lcm) exchange.
pub fn invariant_factors_of_diagonal(diagonal: Vec<BigInt>) -> Vec<BigInt> {
    let (ones, mut rest): (Vec<BigInt>, Vec<BigInt>) =
        diagonal.into_iter().map(|d| d.abs()).partition(|d| d.is_one());
    for i in 0..rest.len() {
        for j in i + 1..rest.len() {
            let g = rest[i].gcd(&rest[j]);
            if g != rest[i] {
                let l = rest[i].lcm(&rest[j]);
                rest[i] = g;
                rest[j] = l;
            }
        }
    }
    let mut out = ones;
    out.extend(rest);
    out
}

pub fn smith_normal_form(m: &SparseIntMatrix) -> SmithForm {
    let diagonal = match Workspace::<i64>::new(m).diagonalize() {
        Ok(d) => d,
        Err(Overflow) => match Workspace::<BigInt>::new(m).diagonalize() {
            Ok(d) => d,
            Err(Overflow) => unreachable!("arbitrary precision does not overflow"),
        },
    };
    SmithForm { invariant_factors: invariant_factors_of_diagonal(diagonal) }
}

struct Dense {
    a: DenseMatrix,
    u: DenseMatrix,
    u_inv: DenseMatrix,
    v: DenseMatrix,
    v_inv: DenseMatrix,
}

impl Dense {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.data.swap(i, j);
        self.u.data.swap(i, j);
        for row in &mut self.u_inv.data {
            row.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in &mut self.a.data {
            row.swap(i, j);
        }
        for row in &mut self.v.data {
            row.swap(i, j);
        }
        self.v_inv.data.swap(i, j);
    }

    /// `row[target] += q * row[source]`
    fn add_row(&mut self, target: usize, q: &BigInt, source: usize) {
        for m in [&mut self.a, &mut self.u] {
            let src = m.data[source].clone();
            for (t, s) in m.data[target].iter_mut().zip(&src) {
                *t += q * s;
            }
        }
        for row in &mut self.u_inv.data {
            let s = row[target].clone();
            row[source] -= q * s;
        }
    }

    /// `col[target] += q * col[source]`
    fn add_col(&mut self, target: usize, q: &BigInt, source: usize) {
        for m in [&mut self.a, &mut self.v] {
            for row in &mut m.data {
                let s = row[source].clone();
                row[target] += q * s;
            }
        }
        let tgt = self.v_inv.data[target].clone();
        for (s, t) in self.v_inv.data[source].iter_mut().zip(&tgt) {
            *s -= q * t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.a.data[i].iter_mut().chain(self.u.data[i].iter_mut()) {
            *x = -&*x;
        }
        for row in &mut self.u_inv.data {
            row[i] = -&row[i];
        }
    }
}

pub fn smith_normal_form_with_transforms(m: &DenseMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows, m.cols);
    let mut w = Dense {
        a: m.clone(),
        u: DenseMatrix::identity(rows),
        u_inv: DenseMatrix::identity(rows),
        v: DenseMatrix::identity(cols),
        v_inv: DenseMatrix::identity(cols),
    };
    for t in 0..rows.min(cols) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = &w.a.data[i][j];
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.magnitude() < w.a.data[bi][bj].magnitude()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((i, j)) = best else { break };
        w.swap_rows(t, i);
        w.swap_cols(t, j);
        loop {
            let p = w.a.data[t][t].clone();
            let mut remainder = None::<(usize, bool)>;
            for i in t + 1..rows {
                if !w.a.data[i][t].is_zero() {
                    let q = -(&w.a.data[i][t] / &p);
                    w.add_row(i, &q, t);
                    if !w.a.data[i][t].is_zero() {
                        remainder = Some((i, true));
                    }
                }
            }
            for j in t + 1..cols {
                if !w.a.data[t][j].is_zero() {
                    let q = -(&w.a.data[t][j] / &p);
                    w.add_col(j, &q, t);
                    if !w.a.data[t][j].is_zero() {
                        remainder = Some((j, false));
                    }
                }
            }
            if let Some((idx, is_row)) = remainder {
                // Move the smallest leftover in the pivot row/column to the pivot.
                let mut best = (idx, is_row);
                let mag = |w: &Dense, (k, r): (usize, bool)| {
                    if r { w.a.data[k][t].magnitude().clone() } else { w.a.data[t][k].magnitude().clone() }
                };
                for k in t + 1..rows {
                    if !w.a.data[k][t].is_zero() && mag(&w, (k, true)) < mag(&w, best) {
                        best = (k, true);
                    }
                }
                for k in t + 1..cols {
                    if !w.a.data[t][k].is_zero() && mag(&w, (k, false)) < mag(&w, best) {
                        best = (k, false);
                    }
                }
                if best.1 {
                    w.swap_rows(t, best.0);
                } else {
                    w.swap_cols(t, best.0);
                }
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !w.a.data[i][j].is_multiple_of(&p)));
            match bad {
                Some(i) => w.add_row(t, &BigInt::one(), i),
                None => break,
            }
        }
        if w.a.data[t][t].is_negative() {
            w.negate_row(t);
        }
    }
    SmithDecomposition { d: w.a, u: w.u, u_inv: w.u_inv, v: w.v, v_inv: w.v_inv }
}
