//! Reference computations that do not go through word enumeration.

use crate::algebra::{AugmentedRack, FiniteGroup, Rack};
use crate::homology::{homology, simplicial_chains, Caps, ChainComplex, Coefficients, HomologyGroup, SparseIntMatrix};
use crate::simplicial::build_nerve;
use crate::Result;

/// Tuples over `0..d` of length `n`, lexicographic.
fn tuples(d: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..d).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

fn tuple_index(d: usize, t: &[usize]) -> usize {
    t.iter().fold(0, |acc, &x| acc * d + x)
}

/// Classical rack complex: `C_n` free on `X^n`, with
/// `∂(x_1..x_n) = Σ_i (-1)^i [(.. x̂_i ..) - (x_1◁x_i, .., x_{i-1}◁x_i, x_{i+1}, ..)]`.
pub fn rack_complex(rack: &Rack, n_max: usize) -> Result<ChainComplex> {
    let d = rack.size();
    let bases: Vec<Vec<Vec<usize>>> = (0..=n_max).map(|n| tuples(d, n)).collect();
    let mut boundaries = vec![SparseIntMatrix::zeros(0, 1)];
    for n in 1..=n_max {
        let mut triplets = Vec::new();
        for (col, t) in bases[n].iter().enumerate() {
            for i in 0..n {
                // i is 0-based here, so the sign (-1)^(i+1)
                let sign = if i % 2 == 0 { -1 } else { 1 };
                let deleted: Vec<usize> = t[..i].iter().chain(&t[i + 1..]).copied().collect();
                let acted: Vec<usize> =
                    t[..i].iter().map(|&x| rack.op(x, t[i])).chain(t[i + 1..].iter().copied()).collect();
                triplets.push((tuple_index(d, &deleted), col, sign));
                triplets.push((tuple_index(d, &acted), col, -sign));
            }
        }
        boundaries.push(SparseIntMatrix::from_triplets(bases[n - 1].len(), bases[n].len(), triplets));
    }
    let labels = bases
        .iter()
        .map(|b| {
            b.iter()
                .map(|t| format!("({})", t.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
                .collect()
        })
        .collect();
    ChainComplex::new(labels, boundaries)
}

pub fn rack_homology(a: &AugmentedRack, m: usize, coeff: Coefficients) -> Result<HomologyGroup> {
    homology(&rack_complex(a.rack(), m + 1)?, m, coeff)
}

/// Dimension of the degree-`m` piece of the free tensor algebra on a graded
/// set with `count` generators in each listed `degree`.
pub fn tensor_algebra_dims(generators: &[(usize, u64)], m: usize) -> u128 {
    assert!(generators.iter().all(|&(deg, _)| deg >= 1), "generator degrees must be positive");
    let mut t = vec![0u128; m + 1];
    t[0] = 1;
    for k in 1..=m {
        t[k] = generators
            .iter()
            .filter(|&&(deg, _)| deg <= k)
            .map(|&(deg, c)| u128::from(c).checked_mul(t[k - deg]).expect("tensor dimension overflow"))
            .fold(0u128, |acc, x| acc.checked_add(x).expect("tensor dimension overflow"));
    }
    t[m]
}

/// `H_m(G)` from the normalized nerve.
pub fn group_homology(g: &FiniteGroup, m: usize, coeff: Coefficients) -> Result<HomologyGroup> {
    let chains = simplicial_chains(&build_nerve(g), m + 1, 0, Caps::default())?;
    homology(&chains.complex, m, coeff)
}
