use super::{check_degeneracy_index, check_face_index, resource_bound, sort_canonical, SimplicialSet, SpecKind};
use crate::algebra::FiniteGroup;
use crate::Result;

/// The nerve `BG`: degree `k` is `G^k` with the bar-construction faces.
#[derive(Clone, Debug)]
pub struct Nerve {
    group: FiniteGroup,
}

pub fn build_nerve(group: &FiniteGroup) -> Nerve {
    Nerve { group: group.clone() }
}

impl Nerve {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }
}

impl SimplicialSet for Nerve {
    type Simplex = Vec<usize>;

    fn kind(&self) -> SpecKind {
        SpecKind::Nerve
    }

    fn degree(&self, simplex: &Vec<usize>) -> usize {
        simplex.len()
    }

    fn enumerate(&self, degree: usize, _max_length: usize, cap: usize) -> Result<Vec<Vec<usize>>> {
        let n = self.group.order();
        let count = u32::try_from(degree)
            .ok()
            .and_then(|d| n.checked_pow(d))
            .unwrap_or(usize::MAX);
        if count > cap {
            return Err(resource_bound(&format!("simplices in degree {degree}"), count, cap));
        }
        let mut out = vec![Vec::with_capacity(degree)];
        for _ in 0..degree {
            out = out
                .into_iter()
                .flat_map(|t| {
                    (0..n).map(move |g| {
                        let mut t = t.clone();
                        t.push(g);
                        t
                    })
                })
                .collect();
        }
        Ok(sort_canonical(self, out))
    }

    fn face(&self, i: usize, simplex: &Vec<usize>) -> Result<Vec<usize>> {
        let k = simplex.len();
        check_face_index(i, k)?;
        let mut t = simplex.clone();
        if i == 0 {
            t.remove(0);
        } else if i == k {
            t.pop();
        } else {
            let merged = self.group.mul(t[i - 1], t[i]);
            t[i - 1] = merged;
            t.remove(i);
        }
        Ok(t)
    }

    fn degeneracy(&self, i: usize, simplex: &Vec<usize>) -> Result<Vec<usize>> {
        check_degeneracy_index(i, simplex.len())?;
        let mut t = simplex.clone();
        t.insert(i, self.group.identity());
        Ok(t)
    }

    fn encode(&self, simplex: &Vec<usize>) -> String {
        let parts: Vec<&str> = simplex.iter().map(|&g| self.group.label(g)).collect();
        format!("({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{nondegenerate_simplices, DEFAULT_SIMPLEX_CAP};

    #[test]
    fn trivial_group_is_a_point() {
        let nerve = build_nerve(&FiniteGroup::trivial());
        for k in 1..4 {
            assert!(nondegenerate_simplices(&nerve, k, 0, DEFAULT_SIMPLEX_CAP).unwrap().is_empty());
        }
    }

    #[test]
    fn z2_counts() {
        let nerve = build_nerve(&FiniteGroup::cyclic(2));
        assert_eq!(nerve.enumerate(2, 0, DEFAULT_SIMPLEX_CAP).unwrap().len(), 4);
        assert_eq!(nondegenerate_simplices(&nerve, 2, 0, DEFAULT_SIMPLEX_CAP).unwrap().len(), 1);
        assert_eq!(nerve.enumerate(3, 0, DEFAULT_SIMPLEX_CAP).unwrap().len(), 8);
    }

    #[test]
    fn middle_face_multiplies() {
        let nerve = build_nerve(&FiniteGroup::cyclic(3));
        assert_eq!(nerve.face(1, &vec![1, 1]).unwrap(), vec![2]);
        assert_eq!(nerve.face(0, &vec![1, 2]).unwrap(), vec![2]);
        assert_eq!(nerve.face(2, &vec![1, 2]).unwrap(), vec![1]);
        assert_eq!(nerve.encode(&vec![1, 2]), "(1,2)");
    }
}
