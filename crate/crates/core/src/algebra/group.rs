use std::collections::{BTreeSet, HashMap, VecDeque};

use super::{check_entries, check_square, AlgebraError};

/// A finite group stored as an explicit Cayley table.
///
/// `table[a][b]` is the index of `a * b`. Permutations compose left to
/// right, matching the right-action convention `x^(gh) = (x^g)^h` used
/// everywhere in this crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

/// Validates a Cayley table with default labels `0, 1, ...`.
pub fn validate_group(table: Vec<Vec<usize>>) -> Result<FiniteGroup, AlgebraError> {
    FiniteGroup::from_table(None, table)
}

impl FiniteGroup {
    pub fn from_table(
        labels: Option<Vec<String>>,
        table: Vec<Vec<usize>>,
    ) -> Result<Self, AlgebraError> {
        let n = table.len();
        check_square(&table)?;
        check_entries(&table, n)?;
        let labels = match labels {
            Some(l) if l.len() != n => {
                return Err(AlgebraError::SizeMismatch {
                    what: "group labels",
                    expected: n,
                    found: l.len(),
                })
            }
            Some(l) => l,
            None => (0..n).map(|i| i.to_string()).collect(),
        };

        for (a, row) in table.iter().enumerate() {
            if row.iter().collect::<BTreeSet<_>>().len() != n {
                return Err(AlgebraError::NotLatinSquare { line: format!("row {a}") });
            }
        }
        for b in 0..n {
            if (0..n).map(|a| table[a][b]).collect::<BTreeSet<_>>().len() != n {
                return Err(AlgebraError::NotLatinSquare { line: format!("column {b}") });
            }
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or(AlgebraError::NoIdentity)?;

        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(AlgebraError::NotAssociative { a, b, c });
                    }
                }
            }
        }

        // Latin rows guarantee a unique right inverse, which is two-sided once
        // associativity holds.
        let inverse = (0..n)
            .map(|a| (0..n).find(|&b| table[a][b] == identity).expect("latin row"))
            .collect();

        Ok(Self { labels, table, identity, inverse })
    }

    pub fn trivial() -> Self {
        Self {
            labels: vec!["e".into()],
            table: vec![vec![0]],
            identity: 0,
            inverse: vec![0],
        }
    }

    /// Cyclic group of order `n` with labels `0..n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order 0");
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_table(None, table).expect("cyclic table is a group")
    }

    /// Closes a set of permutations of `{0..degree}` under composition.
    ///
    /// Elements are ordered by image vector, so the identity comes first.
    /// Labels are `e` for the identity and `p` followed by the image vector
    /// otherwise (`p102` swaps 0 and 1). Returns the group together with the
    /// image vector of each element.
    pub fn from_permutations(
        degree: usize,
        generators: &[Vec<usize>],
    ) -> Result<(Self, Vec<Vec<usize>>), AlgebraError> {
        for g in generators {
            let valid = g.len() == degree
                && g.iter().all(|&v| v < degree)
                && g.iter().collect::<BTreeSet<_>>().len() == degree;
            if !valid {
                return Err(AlgebraError::InvalidPermutation(g.clone()));
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut seen = BTreeSet::from([identity.clone()]);
        let mut queue = VecDeque::from([identity]);
        while let Some(p) = queue.pop_front() {
            for g in generators {
                let q = compose(&p, g);
                if seen.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
        let perms: Vec<Vec<usize>> = seen.into_iter().collect();
        let index: HashMap<&Vec<usize>, usize> =
            perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let table = perms
            .iter()
            .map(|p| perms.iter().map(|q| index[&compose(p, q)]).collect())
            .collect();
        let labels = perms.iter().map(|p| permutation_label(p)).collect();
        let group = Self::from_table(Some(labels), table)?;
        Ok((group, perms))
    }

    /// Restricts to the subgroup generated by `elements`; returns it together
    /// with the embedding (subgroup index -> index in `self`).
    pub fn generated_subgroup(&self, elements: &[usize]) -> (Self, Vec<usize>) {
        let mut members = BTreeSet::from([self.identity]);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(a) = queue.pop_front() {
            for &g in elements {
                let b = self.mul(a, g);
                if members.insert(b) {
                    queue.push_back(b);
                }
            }
        }
        let embedding: Vec<usize> = members.into_iter().collect();
        let position: HashMap<usize, usize> =
            embedding.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let table = embedding
            .iter()
            .map(|&a| embedding.iter().map(|&b| position[&self.mul(a, b)]).collect())
            .collect();
        let labels = embedding.iter().map(|&a| self.labels[a].clone()).collect();
        let sub = Self::from_table(Some(labels), table).expect("subgroup of a valid group");
        (sub, embedding)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g^-1 x g`, the right conjugation action of the group on itself.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }
}

/// `x^(pq) = (x^p)^q`.
fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    p.iter().map(|&x| q[x]).collect()
}

fn permutation_label(p: &[usize]) -> String {
    if p.iter().enumerate().all(|(i, &v)| i == v) {
        return "e".into();
    }
    let parts: Vec<String> = p.iter().map(|v| v.to_string()).collect();
    if p.len() <= 10 {
        format!("p{}", parts.concat())
    } else {
        format!("p{}", parts.join("."))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_table_is_a_group() {
        let g = validate_group(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.identity(), 0);
        assert_eq!(g.inv(1), 1);
    }

    #[test]
    fn repeated_column_is_rejected() {
        let err = validate_group(vec![vec![0, 1], vec![0, 1]]).unwrap_err();
        assert!(matches!(err, AlgebraError::NotLatinSquare { .. }));
    }

    #[test]
    fn latin_square_without_identity() {
        // x*y = -x-y mod 3 is a quasigroup with no identity.
        let t = (0..3).map(|x| (0..3).map(|y| (6 - x - y) % 3).collect()).collect();
        assert_eq!(validate_group(t).unwrap_err(), AlgebraError::NoIdentity);
    }

    #[test]
    fn non_associative_loop() {
        // The smallest non-associative loop (order 5).
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(validate_group(t), Err(AlgebraError::NotAssociative { .. })));
    }

    #[test]
    fn ragged_and_out_of_range_tables() {
        assert!(matches!(
            validate_group(vec![vec![0, 1], vec![1]]),
            Err(AlgebraError::NotSquare { .. })
        ));
        assert!(matches!(
            validate_group(vec![vec![0, 2], vec![1, 0]]),
            Err(AlgebraError::EntryOutOfRange { .. })
        ));
        assert_eq!(validate_group(vec![]).unwrap_err(), AlgebraError::NoIdentity);
    }

    #[test]
    fn s3_from_transposition_and_three_cycle() {
        let (s3, perms) =
            FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(s3.label(s3.identity()), "e");
        assert_eq!(perms[s3.identity()], vec![0, 1, 2]);
        // Brute-force: every product of two closure elements is in the closure.
        for a in s3.elements() {
            for b in s3.elements() {
                assert_eq!(perms[s3.mul(a, b)], compose(&perms[a], &perms[b]));
            }
        }
    }

    #[test]
    fn bad_permutation_generator() {
        assert!(FiniteGroup::from_permutations(3, &[vec![0, 0, 1]]).is_err());
    }

    #[test]
    fn generated_subgroup_of_s3() {
        let (s3, _) = FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        let r = s3.index_of("p120").unwrap();
        let (c3, emb) = s3.generated_subgroup(&[r]);
        assert_eq!(c3.order(), 3);
        assert!(c3.is_abelian());
        assert_eq!(emb[c3.identity()], s3.identity());
    }
}
