use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{SimplicialSet, DEFAULT_SIMPLEX_CAP};
use crate::Result;

/// Outcome of [`check_simplicial_identities`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub simplices_checked: usize,
    pub identities_checked: usize,
    /// First violated identity, if any.
    pub violation: Option<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Verifies the simplicial identities on every simplex of degree `<= k_max`
/// and weight `<= max_length`, or on a seeded sample of `sample_size`
/// simplices per degree when there are more.
///
/// Checked families: `d_i d_j = d_{j-1} d_i` (i < j), `d_i s_j = s_{j-1} d_i`
/// (i < j), `d_j s_j = d_{j+1} s_j = id`, `d_i s_j = s_j d_{i-1}` (i > j+1)
/// and `s_i s_j = s_{j+1} s_i` (i <= j).
pub fn check_simplicial_identities<S: SimplicialSet>(
    spec: &S,
    k_max: usize,
    max_length: usize,
    sample_size: usize,
) -> Result<IdentityReport> {
    let mut report = IdentityReport { simplices_checked: 0, identities_checked: 0, violation: None };
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for k in 0..=k_max {
        let mut simplices = spec.enumerate(k, max_length, DEFAULT_SIMPLEX_CAP)?;
        if simplices.len() > sample_size {
            simplices.shuffle(&mut rng);
            simplices.truncate(sample_size);
        }
        for s in &simplices {
            report.simplices_checked += 1;
            if let Some(v) = check_one(spec, s, &mut report.identities_checked)? {
                report.violation = Some(format!("{v} on {}", spec.encode(s)));
                return Ok(report);
            }
        }
    }
    Ok(report)
}

fn check_one<S: SimplicialSet>(spec: &S, s: &S::Simplex, count: &mut usize) -> Result<Option<String>> {
    let k = spec.degree(s);
    let d = |i: usize, x: &S::Simplex| spec.face(i, x);
    let sd = |i: usize, x: &S::Simplex| spec.degeneracy(i, x);

    for j in 0..=k {
        for i in 0..j {
            if k >= 2 {
                *count += 1;
                if d(i, &d(j, s)?)? != d(j - 1, &d(i, s)?)? {
                    return Ok(Some(format!("d_{i} d_{j} != d_{} d_{i}", j - 1)));
                }
            }
        }
    }

    for j in 0..=k {
        let t = sd(j, s)?;
        for i in 0..=k + 1 {
            *count += 1;
            let lhs = d(i, &t)?;
            let ok = if i < j {
                lhs == sd(j - 1, &d(i, s)?)?
            } else if i == j || i == j + 1 {
                &lhs == s
            } else {
                lhs == sd(j, &d(i - 1, s)?)?
            };
            if !ok {
                return Ok(Some(format!("d_{i} s_{j} identity fails")));
            }
        }
        for i in 0..=j {
            *count += 1;
            if sd(i, &t)? != sd(j + 1, &sd(i, s)?)? {
                return Ok(Some(format!("s_{i} s_{j} != s_{} s_{i}", j + 1)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FiniteGroup, PreCrossedModule};
    use crate::simplicial::{build_envelope, build_nerve, EnvelopeSource, Nerve, SpecKind};
    use crate::words::WordMode;

    #[test]
    fn z2_envelope_up_to_degree_four() {
        let p = PreCrossedModule::over_trivial_group(&FiniteGroup::cyclic(2));
        let spec = build_envelope(EnvelopeSource::PreCrossed(&p), WordMode::GroupSyllable).unwrap();
        let report = check_simplicial_identities(&spec, 4, 3, usize::MAX).unwrap();
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn s3_nerve_degree_three() {
        let s3 = FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap().0;
        let report = check_simplicial_identities(&build_nerve(&s3), 3, 0, usize::MAX).unwrap();
        assert!(report.passed());
        assert_eq!(report.simplices_checked, 1 + 6 + 36 + 216);
    }

    /// A nerve whose middle faces multiply in the wrong order.
    struct CorruptNerve(Nerve);

    impl SimplicialSet for CorruptNerve {
        type Simplex = Vec<usize>;
        fn kind(&self) -> SpecKind {
            SpecKind::Nerve
        }
        fn degree(&self, s: &Vec<usize>) -> usize {
            s.len()
        }
        fn enumerate(&self, k: usize, l: usize, cap: usize) -> Result<Vec<Vec<usize>>> {
            self.0.enumerate(k, l, cap)
        }
        fn face(&self, i: usize, s: &Vec<usize>) -> Result<Vec<usize>> {
            let mut t = self.0.face(i, s)?;
            if i == 0 && t.len() >= 2 {
                t.swap(0, 1);
            }
            Ok(t)
        }
        fn degeneracy(&self, i: usize, s: &Vec<usize>) -> Result<Vec<usize>> {
            self.0.degeneracy(i, s)
        }
        fn encode(&self, s: &Vec<usize>) -> String {
            self.0.encode(s)
        }
    }

    #[test]
    fn corrupted_face_is_reported() {
        let s3 = FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap().0;
        let report = check_simplicial_identities(&CorruptNerve(build_nerve(&s3)), 3, 0, usize::MAX).unwrap();
        assert!(!report.passed());
    }
}
