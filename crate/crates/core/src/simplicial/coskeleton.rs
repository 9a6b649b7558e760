use super::{
    check_degeneracy_index, check_face_index, resource_bound, sort_canonical, SimplicialSet,
    SpecKind,
};
use crate::algebra::PreCrossedModule;
use crate::Result;

/// A `k`-simplex of the 1-coskeleton of `X⋊G ⇉ G`, modulo `G`.
///
/// `vertices` has `k + 1` entries with the last one the identity. The edge
/// between vertices `a < b` is `(x_ab, v_b) ∈ X⋊G` with `π(x_ab) v_b = v_a`;
/// only `x_ab` is stored, in lexicographic order of `(a, b)`. The right
/// `G`-action multiplies vertices and leaves every `x_ab` alone.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatchingFamily {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl MatchingFamily {
    pub fn degree(&self) -> usize {
        self.vertices.len() - 1
    }

    /// `x_ab` for `a < b`.
    pub fn edge(&self, a: usize, b: usize) -> usize {
        self.edges[edge_index(a, b, self.degree())]
    }
}

/// Position of the pair `(a, b)`, `a < b <= k`, in lexicographic order.
pub(crate) fn edge_index(a: usize, b: usize, k: usize) -> usize {
    debug_assert!(a < b && b <= k);
    a * k - a * (a.saturating_sub(1)) / 2 + (b - a - 1)
}

/// `M_*(X,G,π)/G`.
#[derive(Clone, Debug)]
pub struct Coskeleton {
    p: PreCrossedModule,
    /// `preimages[g]` lists the `x` with `π(x) = g`.
    preimages: Vec<Vec<usize>>,
}

pub fn build_coskeleton(p: &PreCrossedModule) -> Coskeleton {
    let mut preimages = vec![Vec::new(); p.group().order()];
    for x in p.x_group().elements() {
        preimages[p.pi(x)].push(x);
    }
    Coskeleton { p: p.clone(), preimages }
}

impl Coskeleton {
    pub fn precrossed(&self) -> &PreCrossedModule {
        &self.p
    }

    /// Multiplies every vertex on the right by the inverse of the last one.
    pub fn normalize(&self, mut family: MatchingFamily) -> MatchingFamily {
        let g = self.p.group();
        let last_inv = g.inv(*family.vertices.last().expect("at least one vertex"));
        for v in &mut family.vertices {
            *v = g.mul(*v, last_inv);
        }
        family
    }

    /// Checks `π(x_ab) v_b = v_a` for every edge.
    pub fn is_matching(&self, family: &MatchingFamily) -> bool {
        let g = self.p.group();
        let k = family.degree();
        family.edges.len() == k * (k + 1) / 2
            && (0..=k).all(|b| {
                (0..b).all(|a| g.mul(self.p.pi(family.edge(a, b)), family.vertices[b]) == family.vertices[a])
            })
    }
}

impl SimplicialSet for Coskeleton {
    type Simplex = MatchingFamily;

    fn kind(&self) -> SpecKind {
        SpecKind::Coskeleton
    }

    fn degree(&self, simplex: &MatchingFamily) -> usize {
        simplex.degree()
    }

    fn enumerate(&self, degree: usize, _max_length: usize, cap: usize) -> Result<Vec<MatchingFamily>> {
        let g = self.p.group();
        let k = degree;
        let mut vertex_sets: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..k {
            vertex_sets = vertex_sets
                .into_iter()
                .flat_map(|vs| {
                    g.elements().map(move |v| {
                        let mut vs = vs.clone();
                        vs.push(v);
                        vs
                    })
                })
                .collect();
        }
        let mut out = Vec::new();
        for mut vertices in vertex_sets {
            vertices.push(g.identity());
            let mut families = vec![Vec::new()];
            for a in 0..k {
                for b in a + 1..=k {
                    let target = g.mul(vertices[a], g.inv(vertices[b]));
                    let choices = &self.preimages[target];
                    families = families
                        .into_iter()
                        .flat_map(|es: Vec<usize>| {
                            choices.iter().map(move |&x| {
                                let mut es = es.clone();
                                es.push(x);
                                es
                            })
                        })
                        .collect();
                }
            }
            for edges in families {
                out.push(MatchingFamily { vertices: vertices.clone(), edges });
                if out.len() > cap {
                    return Err(resource_bound(&format!("simplices in degree {degree}"), out.len(), cap));
                }
            }
        }
        Ok(sort_canonical(self, out))
    }

    /// Deletes vertex `i` with its incident edges.
    fn face(&self, i: usize, simplex: &MatchingFamily) -> Result<MatchingFamily> {
        let k = simplex.degree();
        check_face_index(i, k)?;
        let mut vertices = simplex.vertices.clone();
        vertices.remove(i);
        let mut edges = Vec::with_capacity(k * (k - 1) / 2);
        for a in (0..=k).filter(|&a| a != i) {
            for b in (a + 1..=k).filter(|&b| b != i) {
                edges.push(simplex.edge(a, b));
            }
        }
        Ok(self.normalize(MatchingFamily { vertices, edges }))
    }

    /// Repeats vertex `i`, joined to its copy by the degenerate edge `(1, v_i)`.
    fn degeneracy(&self, i: usize, simplex: &MatchingFamily) -> Result<MatchingFamily> {
        let k = simplex.degree();
        check_degeneracy_index(i, k)?;
        let source = |a: usize| if a <= i { a } else { a - 1 };
        let mut vertices = simplex.vertices.clone();
        vertices.insert(i, simplex.vertices[i]);
        let unit = self.p.x_group().identity();
        let mut edges = Vec::with_capacity((k + 1) * (k + 2) / 2);
        for a in 0..=k + 1 {
            for b in a + 1..=k + 1 {
                let (sa, sb) = (source(a), source(b));
                edges.push(if sa == sb { unit } else { simplex.edge(sa, sb) });
            }
        }
        Ok(MatchingFamily { vertices, edges })
    }

    /// `v0,v1,..;y01,y02,..` with each edge written by its `X` component.
    fn encode(&self, simplex: &MatchingFamily) -> String {
        let g = self.p.group();
        let x = self.p.x_group();
        let vs: Vec<&str> = simplex.vertices.iter().map(|&v| g.label(v)).collect();
        let es: Vec<&str> = simplex.edges.iter().map(|&e| x.label(e)).collect();
        format!("{};{}", vs.join(","), es.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{validate_precrossed, FiniteGroup};
    use crate::simplicial::{build_nerve, nondegenerate_simplices, DEFAULT_SIMPLEX_CAP};

    #[test]
    fn edge_indices_are_lexicographic() {
        let k = 3;
        let mut expected = 0;
        for a in 0..k {
            for b in a + 1..=k {
                assert_eq!(edge_index(a, b, k), expected);
                expected += 1;
            }
        }
    }

    #[test]
    fn trivial_x_matches_nerve_counts() {
        let s3 = FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap().0;
        let trivial = FiniteGroup::trivial();
        let p = validate_precrossed(trivial, s3.clone(), vec![vec![0; 6]], vec![s3.identity()]).unwrap();
        let cosk = build_coskeleton(&p);
        let nerve = build_nerve(&FiniteGroup::trivial());
        for k in 0..4 {
            let c = cosk.enumerate(k, 0, DEFAULT_SIMPLEX_CAP).unwrap();
            assert_eq!(c.len(), 1, "only the constant family survives π = 1");
            assert_eq!(
                nondegenerate_simplices(&cosk, k, 0, DEFAULT_SIMPLEX_CAP).unwrap().len(),
                nondegenerate_simplices(&nerve, k, 0, DEFAULT_SIMPLEX_CAP).unwrap().len()
            );
        }
    }

    #[test]
    fn trivial_x_over_z2() {
        let z2 = FiniteGroup::cyclic(2);
        let p = validate_precrossed(FiniteGroup::trivial(), z2, vec![vec![0, 0]], vec![0]).unwrap();
        // π = 1 forces v_a = v_b for every edge, so only constant families.
        assert_eq!(build_coskeleton(&p).enumerate(2, 0, DEFAULT_SIMPLEX_CAP).unwrap().len(), 1);
    }

    #[test]
    fn identity_z2_counts() {
        let p = PreCrossedModule::identity_conjugation(&FiniteGroup::cyclic(2));
        let cosk = build_coskeleton(&p);
        assert_eq!(cosk.enumerate(1, 0, DEFAULT_SIMPLEX_CAP).unwrap().len(), 2);
        let deg2 = cosk.enumerate(2, 0, DEFAULT_SIMPLEX_CAP).unwrap();
        assert_eq!(deg2.len(), 4);
        assert!(deg2.iter().all(|f| cosk.is_matching(f)));
    }

    #[test]
    fn faces_and_degeneracies_stay_matching() {
        let s3 = FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap().0;
        let cosk = build_coskeleton(&PreCrossedModule::identity_conjugation(&s3));
        for f in cosk.enumerate(2, 0, DEFAULT_SIMPLEX_CAP).unwrap() {
            for i in 0..=2 {
                let d = cosk.face(i, &f).unwrap();
                assert!(cosk.is_matching(&d));
                assert_eq!(*d.vertices.last().unwrap(), s3.identity());
                assert!(cosk.is_matching(&cosk.degeneracy(i, &f).unwrap()));
            }
        }
    }
}
