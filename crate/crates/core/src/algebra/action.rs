use super::{check_entries, AlgebraError, FiniteGroup};

/// A right action `x · g = x^g` of a finite group on a finite carrier.
///
/// `table[x][g]` is the index of `x^g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightAction {
    group_order: usize,
    table: Vec<Vec<usize>>,
}

impl RightAction {
    /// Checks `x^1 = x` and `(x^g)^h = x^(gh)`.
    pub fn new(group: &FiniteGroup, table: Vec<Vec<usize>>) -> Result<Self, AlgebraError> {
        let n = table.len();
        for row in &table {
            if row.len() != group.order() {
                return Err(AlgebraError::ActionInvalid(format!(
                    "action row has {} entries, group has order {}",
                    row.len(),
                    group.order()
                )));
            }
        }
        check_entries(&table, n).map_err(|e| AlgebraError::ActionInvalid(e.to_string()))?;
        let e = group.identity();
        for x in 0..n {
            if table[x][e] != x {
                return Err(AlgebraError::ActionInvalid(format!("{x}^1 != {x}")));
            }
            for g in group.elements() {
                for h in group.elements() {
                    if table[table[x][g]][h] != table[x][group.mul(g, h)] {
                        return Err(AlgebraError::ActionInvalid(format!(
                            "({x}^{g})^{h} != {x}^({g}{h})"
                        )));
                    }
                }
            }
        }
        Ok(Self { group_order: group.order(), table })
    }

    pub fn trivial(carrier_size: usize, group: &FiniteGroup) -> Self {
        Self {
            group_order: group.order(),
            table: (0..carrier_size).map(|x| vec![x; group.order()]).collect(),
        }
    }

    /// The group acting on itself by `x^g = g^-1 x g`.
    pub fn conjugation(group: &FiniteGroup) -> Self {
        Self {
            group_order: group.order(),
            table: group
                .elements()
                .map(|x| group.elements().map(|g| group.conjugate(x, g)).collect())
                .collect(),
        }
    }

    pub fn act(&self, x: usize, g: usize) -> usize {
        self.table[x][g]
    }

    pub fn carrier_size(&self) -> usize {
        self.table.len()
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn is_trivial(&self) -> bool {
        self.table.iter().enumerate().all(|(x, row)| row.iter().all(|&y| y == x))
    }

    /// Finds a witness of `(xy)^g != x^g y^g` when the carrier is the group `x_group`.
    pub(crate) fn automorphism_violation(
        &self,
        x_group: &FiniteGroup,
    ) -> Option<(usize, usize, usize)> {
        for g in 0..self.group_order {
            for x in x_group.elements() {
                for y in x_group.elements() {
                    let lhs = self.act(x_group.mul(x, y), g);
                    let rhs = x_group.mul(self.act(x, g), self.act(y, g));
                    if lhs != rhs {
                        return Some((x, y, g));
                    }
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugation_on_s3_is_an_action() {
        let (s3, _) = FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        let conj = RightAction::conjugation(&s3);
        RightAction::new(&s3, conj.table().to_vec()).unwrap();
        assert!(conj.automorphism_violation(&s3).is_none());
        assert!(!conj.is_trivial());
    }

    #[test]
    fn left_conjugation_is_not_a_right_action() {
        let (s3, _) = FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        let table = s3
            .elements()
            .map(|x| s3.elements().map(|g| s3.mul(s3.mul(g, x), s3.inv(g))).collect())
            .collect();
        assert!(matches!(RightAction::new(&s3, table), Err(AlgebraError::ActionInvalid(_))));
    }

    #[test]
    fn identity_must_act_trivially() {
        let z2 = FiniteGroup::cyclic(2);
        let err = RightAction::new(&z2, vec![vec![1, 1], vec![0, 0]]).unwrap_err();
        assert!(matches!(err, AlgebraError::ActionInvalid(_)));
    }
}
