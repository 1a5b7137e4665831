use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::order::LinearOrder;
use crate::poly::{binomial, IntPolynomial};

use super::{bc_f_vector, tutte};

/// h-vector of the broken circuit complex.
///
/// `full` has length `rank + 1`; entries past `rank` are zero by convention.
/// The trimmed view stops at `s`, the last nonzero index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HVector {
    pub full: Vec<i64>,
    pub rank: usize,
}

impl HVector {
    pub fn new(full: Vec<i64>, rank: usize) -> Result<Self> {
        if full.len() > rank + 1 {
            return Err(Error::LengthMismatch {
                got: full.len(),
                expected: rank + 1,
            });
        }
        let mut full = full;
        full.resize(rank + 1, 0);
        Ok(HVector { full, rank })
    }

    /// Largest index with a nonzero entry.
    pub fn s(&self) -> Option<usize> {
        self.full.iter().rposition(|&h| h != 0)
    }

    pub fn trimmed(&self) -> &[i64] {
        match self.s() {
            Some(s) => &self.full[..=s],
            None => &[],
        }
    }

    /// `h_i`, zero outside `0..=rank`.
    pub fn get(&self, i: i64) -> i64 {
        if i < 0 {
            return 0;
        }
        self.full.get(i as usize).copied().unwrap_or(0)
    }

    /// `h(M;t) = sum_i h_i t^(r-i)`.
    pub fn polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(self.full.iter().rev().copied().collect())
    }

    pub fn from_polynomial(p: &IntPolynomial, rank: usize) -> Result<Self> {
        if p.degree().is_some_and(|d| d > rank) {
            return Err(Error::LengthMismatch {
                got: p.degree().unwrap_or(0) + 1,
                expected: rank + 1,
            });
        }
        Ok(HVector {
            full: (0..=rank).map(|i| p.coeff(rank - i)).collect(),
            rank,
        })
    }
}

fn pad(v: &[i64], r: usize) -> Result<Vec<i64>> {
    if v.len() > r + 1 {
        return Err(Error::LengthMismatch {
            got: v.len(),
            expected: r + 1,
        });
    }
    let mut out = v.to_vec();
    out.resize(r + 1, 0);
    Ok(out)
}

/// `h_i = sum_j (-1)^(i-j) C(r-j, i-j) f_j`.
pub fn f_to_h(f: &[i64], r: usize) -> Result<Vec<i64>> {
    let f = pad(f, r)?;
    let r = r as i64;
    Ok((0..=r)
        .map(|i| {
            (0..=i)
                .map(|j| {
                    let sign = if (i - j) % 2 == 0 { 1 } else { -1 };
                    sign * binomial(r - j, i - j) * f[j as usize]
                })
                .sum()
        })
        .collect())
}

/// `f_i = sum_j C(r-j, i-j) h_j`.
pub fn h_to_f(h: &[i64], r: usize) -> Result<Vec<i64>> {
    let h = pad(h, r)?;
    let r = r as i64;
    Ok((0..=r)
        .map(|i| {
            (0..=i)
                .map(|j| binomial(r - j, i - j) * h[j as usize])
                .sum()
        })
        .collect())
}

pub fn h_vector_via_f(m: &Matroid) -> Result<HVector> {
    let f = bc_f_vector(m, &LinearOrder::natural(m.len()))?;
    HVector::new(f.to_h()?, f.rank)
}

pub fn h_vector_via_tutte(m: &Matroid) -> Result<HVector> {
    if m.has_loops() {
        return Err(Error::HasLoops);
    }
    HVector::from_polynomial(&tutte(m).at_y_zero(), m.rank())
}

/// h-vector computed both from face counts and from `T(M;t,0)`; the two
/// must agree.
pub fn h_vector(m: &Matroid) -> Result<HVector> {
    let a = h_vector_via_f(m)?;
    let b = h_vector_via_tutte(m)?;
    if a != b {
        return Err(Error::InternalInconsistency(format!(
            "h-vector from face counts {:?} differs from Tutte route {:?}",
            a.full, b.full
        )));
    }
    Ok(a)
}

pub fn h_polynomial(m: &Matroid) -> Result<IntPolynomial> {
    Ok(h_vector(m)?.polynomial())
}

/// `T(M;t,0)` for any matroid. Zero when `M` has a loop, matching an empty
/// broken circuit complex.
pub fn h_polynomial_any(m: &Matroid) -> IntPolynomial {
    tutte(m).at_y_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transforms() {
        assert_eq!(f_to_h(&[1, 3, 2], 2).unwrap(), vec![1, 1, 0]);
        assert_eq!(f_to_h(&[1, 6, 15, 17, 7], 4).unwrap(), vec![1, 2, 3, 1, 0]);
        assert_eq!(h_to_f(&[1, 2, 3, 1], 4).unwrap(), vec![1, 6, 15, 17, 7]);
        assert!(matches!(
            f_to_h(&[1, 2, 3, 4], 2),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn trimming() {
        let h = HVector::new(vec![1, 2, 3, 1], 4).unwrap();
        assert_eq!(h.full, vec![1, 2, 3, 1, 0]);
        assert_eq!(h.trimmed(), &[1, 2, 3, 1]);
        assert_eq!(h.s(), Some(3));
        assert_eq!(h.get(-1), 0);
        assert_eq!(h.get(7), 0);
        assert_eq!(h.polynomial().to_string(), "t^4 + 2t^3 + 3t^2 + t");
    }
}
