use serde::Serialize;

use crate::error::Result;
use crate::invariants::h_vector;
use crate::matroid::Matroid;

/// `hbar_i = h_{s-i} - h_i` for `0 <= i <= s/2`, from the trimmed h-vector.
/// A matroid with a loop gets `(0)` and no `s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplementaryHVector {
    pub entries: Vec<i64>,
    pub s: Option<usize>,
}

impl ComplementaryHVector {
    pub fn from_trimmed(h: &[i64]) -> Self {
        if h.is_empty() {
            return Self::loopy();
        }
        let s = h.len() - 1;
        ComplementaryHVector {
            entries: (0..=s / 2).map(|i| h[s - i] - h[i]).collect(),
            s: Some(s),
        }
    }

    pub fn loopy() -> Self {
        ComplementaryHVector {
            entries: vec![0],
            s: None,
        }
    }

    /// `hbar_i`, zero outside `0..=s/2`.
    pub fn get(&self, i: i64) -> i64 {
        if i < 0 {
            return 0;
        }
        self.entries.get(i as usize).copied().unwrap_or(0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|&x| x >= 0)
    }
}

pub fn complementary_h(m: &Matroid) -> Result<ComplementaryHVector> {
    if m.has_loops() {
        return Ok(ComplementaryHVector::loopy());
    }
    Ok(ComplementaryHVector::from_trimmed(h_vector(m)?.trimmed()))
}

/// `(1, h_1 - h_0, ..., h_{s/2} - h_{s/2 - 1})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GVector {
    pub entries: Vec<i64>,
}

impl GVector {
    pub fn from_trimmed(h: &[i64]) -> Self {
        let half = h.len().saturating_sub(1) / 2;
        let mut entries = vec![1];
        entries.extend((1..=half).map(|i| h[i] - h[i - 1]));
        GVector { entries }
    }
}

pub fn g_vector(m: &Matroid) -> Result<GVector> {
    Ok(GVector::from_trimmed(h_vector(m)?.trimmed()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_bipartite, graphic, uniform};
    use crate::ground::GroundSet;

    #[test]
    fn k23() {
        let m = graphic(&complete_bipartite(2, 3).unwrap()).unwrap();
        assert_eq!(complementary_h(&m).unwrap().entries, vec![0, 1]);
        assert_eq!(g_vector(&m).unwrap().entries, vec![1, 1]);
    }

    #[test]
    fn symmetric_and_loopy() {
        assert_eq!(
            ComplementaryHVector::from_trimmed(&[1, 2, 2, 1]).entries,
            vec![0, 0]
        );
        let l = Matroid::from_circuits(GroundSet::numbered(2), [vec![1]]).unwrap();
        let hb = complementary_h(&l).unwrap();
        assert_eq!(hb.entries, vec![0]);
        assert_eq!(hb.s, None);
        assert_eq!(hb.get(5), 0);
    }

    #[test]
    fn g_of_uniform() {
        // U(3,5): h = (1,2,3)
        let m = uniform(3, 5).unwrap();
        assert_eq!(g_vector(&m).unwrap().entries, vec![1, 1]);
    }
}
