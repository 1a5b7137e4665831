use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::order::LinearOrder;
use crate::set::{self, Set};

/// Face counts of the broken circuit complex by cardinality, `counts[i]` for
/// `i = 0..=rank`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FVector {
    pub counts: Vec<i64>,
    pub rank: usize,
}

impl FVector {
    pub fn to_h(&self) -> Result<Vec<i64>> {
        super::f_to_h(&self.counts, self.rank)
    }
}

/// Circuits with their least element removed, as a minimal family.
pub fn broken_circuits(m: &Matroid, order: &LinearOrder) -> Result<Vec<Set>> {
    if m.has_loops() {
        return Err(Error::HasLoops);
    }
    if order.len() != m.len() {
        return Err(Error::BadOrder(format!(
            "order has {} elements, ground set has {}",
            order.len(),
            m.len()
        )));
    }
    let family = m
        .circuit_masks()
        .iter()
        .map(|&c| c & !set::bit(order.least(c).expect("nonempty circuit")))
        .collect();
    Ok(set::minimalize(family))
}

/// Counts the subsets containing no broken circuit by depth-first search,
/// abandoning a branch as soon as the last added element completes one.
pub fn bc_f_vector(m: &Matroid, order: &LinearOrder) -> Result<FVector> {
    let broken = broken_circuits(m, order)?;
    let n = m.len();
    let rank = m.rank();
    let mut counts = vec![0i64; rank + 1];
    // broken circuits grouped by their highest index: only those can be
    // completed by adding that element in ascending order.
    let mut by_top: Vec<Vec<Set>> = vec![Vec::new(); n];
    for &b in &broken {
        by_top[31 - b.leading_zeros() as usize].push(b);
    }
    fn walk(
        face: Set,
        size: usize,
        start: usize,
        n: usize,
        by_top: &[Vec<Set>],
        counts: &mut [i64],
    ) {
        counts[size] += 1;
        for e in start..n {
            let cand = face | set::bit(e);
            if by_top[e].iter().any(|&b| set::is_subset(b, cand)) {
                continue;
            }
            walk(cand, size + 1, e + 1, n, by_top, counts);
        }
    }
    walk(0, 0, 0, n, &by_top, &mut counts);
    Ok(FVector { counts, rank })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::GroundSet;

    #[test]
    fn broken_circuits_of_small_matroids() {
        let u23 = Matroid::circuit(GroundSet::numbered(3)).unwrap();
        assert_eq!(
            broken_circuits(&u23, &LinearOrder::natural(3)).unwrap(),
            vec![0b110]
        );
        let pair = Matroid::circuit(GroundSet::numbered(2)).unwrap();
        assert_eq!(
            broken_circuits(&pair, &LinearOrder::natural(2)).unwrap(),
            vec![0b10]
        );
        let loopy = Matroid::from_circuits(GroundSet::numbered(1), [[1]]).unwrap();
        assert_eq!(
            bc_f_vector(&loopy, &LinearOrder::natural(1)),
            Err(Error::HasLoops)
        );
    }

    #[test]
    fn f_vectors() {
        let u23 = Matroid::circuit(GroundSet::numbered(3)).unwrap();
        assert_eq!(
            bc_f_vector(&u23, &LinearOrder::natural(3)).unwrap().counts,
            vec![1, 3, 2]
        );
        let free = Matroid::free(GroundSet::numbered(4));
        assert_eq!(
            bc_f_vector(&free, &LinearOrder::natural(4)).unwrap().counts,
            vec![1, 4, 6, 4, 1]
        );
    }
}
