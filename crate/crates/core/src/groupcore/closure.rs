//! Multiplicative closure by worklist BFS.

use std::collections::{HashSet, VecDeque};
use std::hash::Hash;

use crate::cycarith::CycMatrix;
use crate::error::{Error, Result};

use super::permutation::Permutation;
use super::quaternion::Quaternion;

/// Something with an associative product that can be closed under multiplication.
pub trait GroupPayload: Clone + Eq + Hash + Ord {
    /// `self · rhs`
    fn compose(&self, rhs: &Self) -> Self;
}

impl GroupPayload for Quaternion {
    fn compose(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
}

impl GroupPayload for Permutation {
    fn compose(&self, rhs: &Self) -> Self {
        self.then(rhs)
    }
}

impl GroupPayload for CycMatrix {
    fn compose(&self, rhs: &Self) -> Self {
        self.matmul(rhs)
    }
}

/// All products of the generators, identity first, in BFS discovery order.
///
/// Fails with `CapExceeded` once more than `cap` distinct elements have been found.
pub fn closure<T: GroupPayload>(identity: T, generators: &[T], cap: usize) -> Result<Vec<T>> {
    let mut seen: HashSet<T> = HashSet::new();
    let mut order = vec![identity.clone()];
    seen.insert(identity);
    let mut queue: VecDeque<usize> = VecDeque::from([0]);
    while let Some(idx) = queue.pop_front() {
        for g in generators {
            let next = order[idx].compose(g);
            if seen.contains(&next) {
                continue;
            }
            if order.len() >= cap {
                return Err(Error::CapExceeded { cap });
            }
            seen.insert(next.clone());
            order.push(next);
            queue.push_back(order.len() - 1);
        }
    }
    Ok(order)
}

/// Result of closing a set of matrices.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    pub order: usize,
    pub elements: Vec<CycMatrix>,
}

/// Closes invertible square matrices of a common size under multiplication, with exact equality.
pub fn matrix_group_closure(generators: &[CycMatrix], cap: usize) -> Result<MatrixGroup> {
    let (n, gens) = checked_matrix_generators(generators)?;
    let elements = closure(CycMatrix::identity(n), &gens, cap)?;
    Ok(MatrixGroup { order: elements.len(), elements })
}

/// Common size and deduplicated list of square invertible generators.
pub(crate) fn checked_matrix_generators(generators: &[CycMatrix]) -> Result<(usize, Vec<CycMatrix>)> {
    let Some(first) = generators.first() else {
        return Err(Error::InvalidInput("matrix closure needs at least one generator".into()));
    };
    let n = first.rows();
    for g in generators {
        if !g.is_square() || g.rows() != n {
            return Err(Error::DimensionMismatch(format!(
                "generators must all be {n}x{n}, found {}x{}",
                g.rows(),
                g.cols()
            )));
        }
        if g.rank() != n {
            return Err(Error::NotInvertible);
        }
    }
    let mut gens: Vec<CycMatrix> = Vec::new();
    for g in generators {
        if !gens.contains(g) {
            gens.push(g.clone());
        }
    }
    Ok((n, gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycarith::Cyc;

    #[test]
    fn quaternion_closure_sizes() {
        let q8 = closure(Quaternion::one(), &[Quaternion::i(), Quaternion::j()], 100).unwrap();
        assert_eq!(q8.len(), 8);
        let t = closure(Quaternion::one(), &[Quaternion::i(), Quaternion::w()], 100).unwrap();
        assert_eq!(t.len(), 24);
    }

    #[test]
    fn cap_is_enforced() {
        let two = Quaternion::from_ints(2, 0, 0, 0);
        assert_eq!(closure(Quaternion::one(), &[two], 50), Err(Error::CapExceeded { cap: 50 }));
    }

    #[test]
    fn matrix_closure_examples() {
        assert_eq!(matrix_group_closure(&[CycMatrix::identity(4)], 10).unwrap().order, 1);
        let li = Quaternion::i().left_matrix();
        let lj = Quaternion::j().left_matrix();
        assert_eq!(matrix_group_closure(&[li, lj], 100).unwrap().order, 8);
        let singular = CycMatrix::from_ints(&[&[1, 0], &[0, 0]]);
        assert_eq!(matrix_group_closure(&[singular], 10).unwrap_err(), Error::NotInvertible);
        let mixed = [CycMatrix::identity(2), CycMatrix::identity(3)];
        assert!(matches!(matrix_group_closure(&mixed, 10), Err(Error::DimensionMismatch(_))));
        let rot = CycMatrix::from_rows(vec![vec![Cyc::i()]]);
        assert_eq!(matrix_group_closure(&[rot], 10).unwrap().order, 4);
    }
}
