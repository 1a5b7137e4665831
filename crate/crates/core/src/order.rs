use crate::error::{Error, Result};
use crate::ground::{GroundSet, Label};
use crate::set::{self, Set};

/// A total order on the ground set. `sequence[k]` is the index of the
/// element with priority `k`; priority 0 is the least element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearOrder {
    sequence: Vec<usize>,
    position: Vec<usize>,
}

impl LinearOrder {
    /// Ascending label order.
    pub fn natural(n: usize) -> Self {
        LinearOrder {
            sequence: (0..n).collect(),
            position: (0..n).collect(),
        }
    }

    pub fn from_sequence(sequence: Vec<usize>) -> Result<Self> {
        let n = sequence.len();
        let mut position = vec![usize::MAX; n];
        for (k, &e) in sequence.iter().enumerate() {
            if e >= n || position[e] != usize::MAX {
                return Err(Error::BadOrder(format!(
                    "{sequence:?} is not a permutation"
                )));
            }
            position[e] = k;
        }
        Ok(LinearOrder { sequence, position })
    }

    /// Order given as labels, least first.
    pub fn from_labels(ground: &GroundSet, labels: &[Label]) -> Result<Self> {
        if labels.len() != ground.len() {
            return Err(Error::BadOrder(format!(
                "expected {} elements, got {}",
                ground.len(),
                labels.len()
            )));
        }
        let seq = labels
            .iter()
            .map(|l| {
                ground
                    .index_of(l)
                    .ok_or_else(|| Error::ElementNotInGroundSet(l.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_sequence(seq)
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    pub fn position(&self, e: usize) -> usize {
        self.position[e]
    }

    pub fn labels(&self, ground: &GroundSet) -> Vec<Label> {
        self.sequence
            .iter()
            .map(|&i| ground.label(i).clone())
            .collect()
    }

    /// Least element of a nonempty set under this order.
    pub fn least(&self, s: Set) -> Option<usize> {
        set::elements(s).min_by_key(|&e| self.position[e])
    }

    /// Every order on `n` elements, in lexicographic order of sequences.
    pub fn all(n: usize) -> impl Iterator<Item = LinearOrder> {
        let mut next: Option<Vec<usize>> = Some((0..n).collect());
        std::iter::from_fn(move || {
            let cur = next.take()?;
            let mut succ = cur.clone();
            if next_permutation(&mut succ) {
                next = Some(succ);
            }
            Some(LinearOrder::from_sequence(cur).expect("permutation"))
        })
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::labels;

    #[test]
    fn all_orders_counted() {
        assert_eq!(LinearOrder::all(0).count(), 1);
        assert_eq!(LinearOrder::all(4).count(), 24);
        let mut seen: Vec<Vec<usize>> =
            LinearOrder::all(4).map(|o| o.sequence().to_vec()).collect();
        seen.dedup();
        assert_eq!(seen.len(), 24);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(LinearOrder::from_sequence(vec![0, 0, 1]).is_err());
        let g = GroundSet::numbered(3);
        assert!(LinearOrder::from_labels(&g, &labels([1, 2])).is_err());
        let o = LinearOrder::from_labels(&g, &labels([3, 1, 2])).unwrap();
        assert_eq!(o.least(0b011), Some(0));
        assert_eq!(o.least(0b111), Some(2));
    }
}
