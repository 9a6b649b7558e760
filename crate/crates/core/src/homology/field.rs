use std::collections::HashMap;

use super::matrix::SparseIntMatrix;

/// Rank over `GF(p)` by sparse column elimination.
pub fn rank_mod_p(m: &SparseIntMatrix, p: u32) -> usize {
    assert!(p >= 2, "modulus must be at least 2");
    let p = u64::from(p);
    // pivots[leading row] = reduced column with that leading row, normalized to lead 1
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    for c in 0..m.cols() {
        let mut v: Vec<(usize, u64)> = m
            .column(c)
            .iter()
            .map(|&(r, _, x)| (r, x.rem_euclid(p as i64) as u64))
            .filter(|&(_, x)| x != 0)
            .collect();
        while let Some(&(lead, a)) = v.first() {
            match pivots.get(&lead) {
                Some(piv) => v = axpy(&v, p - a, piv, p),
                None => {
                    let inv = pow_mod(a, p - 2, p);
                    v.iter_mut().for_each(|(_, x)| *x = *x * inv % p);
                    pivots.insert(lead, v);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// `v + s * w` over GF(p) for sorted sparse vectors.
fn axpy(v: &[(usize, u64)], s: u64, w: &[(usize, u64)], p: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < w.len() {
        let (r, x) = match (v.get(i), w.get(j)) {
            (Some(&(rv, xv)), Some(&(rw, _))) if rv < rw => {
                i += 1;
                (rv, xv)
            }
            (Some(&(rv, xv)), Some(&(rw, xw))) if rv == rw => {
                i += 1;
                j += 1;
                (rv, (xv + s * xw) % p)
            }
            (_, Some(&(rw, xw))) => {
                j += 1;
                (rw, s * xw % p)
            }
            (Some(&(rv, xv)), None) => {
                i += 1;
                (rv, xv)
            }
            (None, None) => unreachable!(),
        };
        if x != 0 {
            out.push((r, x));
        }
    }
    out
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Small primes accepted as coefficient fields.
pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}
