//! Identity checkers relating the complementary h-vector of a matroid to
//! those of its minors across a series class.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ground::Label;
use crate::invariants::h_vector;
use crate::matroid::Matroid;
use crate::poly::IntPolynomial;
use crate::set::{self, Set};

use super::complementary::ComplementaryHVector;
use super::sequence::is_strongly_flawless;

/// h-data of a possibly loopy minor: full h-vector (zero if loopy) and hbar.
#[derive(Clone, Debug)]
pub(crate) struct MinorH {
    pub full: Vec<i64>,
    pub hbar: ComplementaryHVector,
}

impl MinorH {
    pub fn of(m: &Matroid) -> Result<Self> {
        if m.has_loops() {
            return Ok(MinorH {
                full: vec![0; m.rank() + 1],
                hbar: ComplementaryHVector::loopy(),
            });
        }
        let h = h_vector(m)?;
        Ok(MinorH {
            hbar: ComplementaryHVector::from_trimmed(h.trimmed()),
            full: h.full,
        })
    }

    /// `h_i`, zero outside `0..=r`.
    pub fn h(&self, i: i64) -> i64 {
        if i < 0 {
            return 0;
        }
        self.full.get(i as usize).copied().unwrap_or(0)
    }

    pub fn hbar(&self, i: i64) -> i64 {
        self.hbar.get(i)
    }

    /// `h_{s-i} - h_i` for every `i >= 0`, without clipping at `s/2`.
    pub fn hbar_unclipped(&self, i: i64) -> i64 {
        match self.hbar.s {
            Some(s) if i >= 0 => self.h(s as i64 - i) - self.h(i),
            _ => 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureKind {
    /// A right-hand side differs from the directly computed value.
    Mismatch,
    /// Two applicable branches of a piecewise formula disagree.
    BranchDisagreement,
}

/// One index of an identity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexCheck {
    pub i: usize,
    pub lhs: i64,
    pub rhs: Vec<(String, i64)>,
}

impl IndexCheck {
    fn failure(&self) -> Option<FailureKind> {
        if self.rhs.windows(2).any(|w| w[0].1 != w[1].1) {
            Some(FailureKind::BranchDisagreement)
        } else if self.rhs.iter().any(|(_, v)| *v != self.lhs) {
            Some(FailureKind::Mismatch)
        } else {
            None
        }
    }
}

/// Per-index evaluation of an identity; `first_violation` is set iff it fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub holds: bool,
    pub first_violation: Option<usize>,
    pub failure: Option<FailureKind>,
    pub indices: Vec<IndexCheck>,
}

impl IdentityReport {
    fn from_indices(indices: Vec<IndexCheck>) -> Self {
        let first = indices.iter().find_map(|c| c.failure().map(|f| (c.i, f)));
        IdentityReport {
            holds: first.is_none(),
            first_violation: first.map(|(i, _)| i),
            failure: first.map(|(_, f)| f),
            indices,
        }
    }
}

fn series_class_mask(m: &Matroid, s: &[Label], e: &Label) -> Result<Set> {
    if !m.is_connected() {
        return Err(Error::PreconditionViolation("M is not connected".into()));
    }
    let mask = m.ground().mask_of(s)?;
    let eb = m.ground().mask_of(std::slice::from_ref(e))?;
    if mask & eb == 0 {
        return Err(Error::PreconditionViolation(format!("{e} is not in S")));
    }
    if !m.series_classes()?.classes().any(|c| c.mask == mask) {
        return Err(Error::PreconditionViolation(
            "S is not a series class".into(),
        ));
    }
    Ok(mask)
}

/// `hbar_i(M) = hbar_i(M/e) + hbar_{i-m+1}(M-S) + h_{i-m+1}(M/S) - h_{i-m}(M/S)`
/// for a non-trivial removable series class `S` of connected `M`, every
/// `hbar` taken as defined (zero past half its own top index).
pub fn check_series1(m: &Matroid, s: &[Label], e: &Label) -> Result<IdentityReport> {
    series1(m, s, e, false)
}

/// The same identity with the right-hand `hbar` terms read as
/// `h_{s'-j} - h_j` at every `j >= 0`, `s'` the top index of that minor.
/// At `i = s/2` with `s` even this differs from [`check_series1`], since
/// `M/e` has top index `s - 1`.
pub fn check_series1_unclipped(m: &Matroid, s: &[Label], e: &Label) -> Result<IdentityReport> {
    series1(m, s, e, true)
}

fn series1(m: &Matroid, s: &[Label], e: &Label, unclipped: bool) -> Result<IdentityReport> {
    let mask = series_class_mask(m, s, e)?;
    let size = set::len(mask) as i64;
    if size < 2 {
        return Err(Error::PreconditionViolation("S is trivial".into()));
    }
    if !m.delete_mask(mask).is_connected() {
        return Err(Error::PreconditionViolation("S is not removable".into()));
    }
    let eb = m.ground().mask_of(std::slice::from_ref(e))?;
    let whole = MinorH::of(m)?;
    let me = MinorH::of(&m.contract_mask(eb))?;
    let ms = MinorH::of(&m.delete_mask(mask))?;
    let q = MinorH::of(&m.contract_mask(mask))?;
    let hbar = |x: &MinorH, j: i64| {
        if unclipped {
            x.hbar_unclipped(j)
        } else {
            x.hbar(j)
        }
    };
    let s_top = whole.hbar.s.unwrap_or(0);
    let indices = (0..=s_top / 2)
        .map(|i| {
            let k = i as i64;
            let rhs = hbar(&me, k) + hbar(&ms, k - size + 1) + q.h(k - size + 1) - q.h(k - size);
            IndexCheck {
                i,
                lhs: whole.hbar(k),
                rhs: vec![("rhs".into(), rhs)],
            }
        })
        .collect();
    Ok(IdentityReport::from_indices(indices))
}

/// Piecewise formula for `hbar(M)` in terms of `M~ = M/(S-e)` and `M/S` for
/// a series class `S` of connected `M`. Every applicable branch is evaluated
/// at each index.
pub fn check_series2(m: &Matroid, s: &[Label], e: &Label) -> Result<IdentityReport> {
    let mask = series_class_mask(m, s, e)?;
    let eb = m.ground().mask_of(std::slice::from_ref(e))?;
    let size = set::len(mask) as i64;
    let whole = MinorH::of(m)?;
    let tilde = MinorH::of(&m.contract_mask(mask & !eb))?;
    let q = MinorH::of(&m.contract_mask(mask))?;
    let s_top = whole.hbar.s.unwrap_or(0) as i64;
    let low_end = s_top - size + 1;
    let indices = (0..=s_top / 2)
        .map(|i| {
            let mut rhs = Vec::new();
            if i <= (size - 1).min(low_end) {
                let a: i64 = (0..=i.min(s_top - size - i))
                    .map(|j| tilde.hbar(j))
                    .sum::<i64>()
                    + (1..=i).map(|j| q.h(i - j) - q.h(low_end - j)).sum::<i64>();
                rhs.push(("low".to_string(), a));
            }
            if size - 1 <= low_end && size - 1 <= i {
                let b: i64 = (i - size + 1..=i.min(s_top - size - i))
                    .map(|j| tilde.hbar(j))
                    .sum::<i64>()
                    + (1..size)
                        .map(|j| q.h(i - j) - q.h(s_top - i - j))
                        .sum::<i64>();
                rhs.push(("middle".to_string(), b));
            }
            if low_end < size && low_end <= i {
                rhs.push(("vanishing".to_string(), 0));
            }
            IndexCheck {
                i: i as usize,
                lhs: whole.hbar(i),
                rhs,
            }
        })
        .collect();
    Ok(IdentityReport::from_indices(indices))
}

/// Strong flawlessness of `phi * psi`, read in descending degree after
/// dividing out the largest power of `t`.
pub fn product_strongly_flawless_check(phi: &IntPolynomial, psi: &IntPolynomial) -> Result<bool> {
    if phi.coeffs().iter().chain(psi.coeffs()).any(|&c| c < 0) {
        return Err(Error::NegativeCoefficients);
    }
    let p = phi * psi;
    if p.is_zero() {
        return Ok(true);
    }
    is_strongly_flawless(&p.coefficients_descending())
}

/// A pair of sequences whose product fails.
pub type FailingPair = (Vec<i64>, Vec<i64>);

/// Exhaustive check over all pairs of strongly flawless nonnegative
/// sequences of length `<= max_len` with entries `<= max_entry`. Returns the
/// number of pairs checked and the first failing pair, if any.
pub fn product_grid(max_len: usize, max_entry: i64) -> Result<(usize, Option<FailingPair>)> {
    let mut seqs = Vec::new();
    for len in 1..=max_len {
        let mut a = vec![0i64; len];
        loop {
            // leading coefficient nonzero so the sequence is the polynomial's own
            if a[0] != 0 && is_strongly_flawless(&a)? {
                seqs.push(a.clone());
            }
            let Some(k) = a.iter().rposition(|&x| x < max_entry) else {
                break;
            };
            a[k] += 1;
            a[k + 1..].iter_mut().for_each(|x| *x = 0);
        }
    }
    let poly = |a: &[i64]| IntPolynomial::new(a.iter().rev().copied().collect());
    let mut count = 0;
    for a in &seqs {
        for b in &seqs {
            count += 1;
            if !product_strongly_flawless_check(&poly(a), &poly(b))? {
                return Ok((count, Some((a.clone(), b.clone()))));
            }
        }
    }
    Ok((count, None))
}
