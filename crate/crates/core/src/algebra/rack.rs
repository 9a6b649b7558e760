use std::collections::BTreeSet;

use super::{check_entries, check_square, AlgebraError};

/// A finite rack: `op[x][y] = x ◁ y`, right multiplication by every `y` a
/// bijection and `(x◁y)◁z = (x◁z)◁(y◁z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rack {
    op: Vec<Vec<usize>>,
}

pub fn validate_rack(op: Vec<Vec<usize>>) -> Result<Rack, AlgebraError> {
    let n = op.len();
    check_square(&op)?;
    check_entries(&op, n)?;
    for y in 0..n {
        if (0..n).map(|x| op[x][y]).collect::<BTreeSet<_>>().len() != n {
            return Err(AlgebraError::NotBijective { y });
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if op[op[x][y]][z] != op[op[x][z]][op[y][z]] {
                    return Err(AlgebraError::NotSelfDistributive { x, y, z });
                }
            }
        }
    }
    Ok(Rack { op })
}

impl Rack {
    pub fn size(&self) -> usize {
        self.op.len()
    }

    pub fn op(&self, x: usize, y: usize) -> usize {
        self.op[x][y]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.op
    }

    pub fn is_trivial(&self) -> bool {
        self.op.iter().enumerate().all(|(x, row)| row.iter().all(|&v| v == x))
    }
}
