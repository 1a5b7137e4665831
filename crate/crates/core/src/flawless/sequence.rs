//! Shape predicates on integer sequences.
//!
//! Each predicate reports the first index witnessing a violation, or `None`
//! when it holds.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::binomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    Unimodal,
    Flawless,
    StronglyFlawless,
    Symmetric,
    LogConcave,
    StronglyLogConcave,
    /// Macaulay's criterion; evaluated on the g-vector in sweeps.
    OSequence,
}

impl Predicate {
    pub const ALL: [Predicate; 7] = [
        Predicate::Unimodal,
        Predicate::Flawless,
        Predicate::StronglyFlawless,
        Predicate::Symmetric,
        Predicate::LogConcave,
        Predicate::StronglyLogConcave,
        Predicate::OSequence,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Predicate::Unimodal => "unimodal",
            Predicate::Flawless => "flawless",
            Predicate::StronglyFlawless => "strongly-flawless",
            Predicate::Symmetric => "symmetric",
            Predicate::LogConcave => "log-concave",
            Predicate::StronglyLogConcave => "strongly-log-concave",
            Predicate::OSequence => "o-sequence",
        }
    }

    pub fn first_violation(&self, a: &[i64]) -> Result<Option<usize>> {
        match self {
            Predicate::Unimodal => unimodal_violation(a),
            Predicate::Flawless => flawless_violation(a),
            Predicate::StronglyFlawless => strongly_flawless_violation(a),
            Predicate::Symmetric => symmetric_violation(a),
            Predicate::LogConcave => log_concave_violation(a),
            Predicate::StronglyLogConcave => strongly_log_concave_violation(a),
            Predicate::OSequence => o_sequence_violation(a),
        }
    }

    pub fn evaluate(&self, a: &[i64]) -> Result<PredicateOutcome> {
        let first_violation = self.first_violation(a)?;
        Ok(PredicateOutcome {
            predicate: *self,
            holds: first_violation.is_none(),
            first_violation,
        })
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Predicate::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::BadParameters(format!("unknown predicate `{s}`")))
    }
}

/// Boolean outcome plus the first violating index; the index is present
/// exactly when the predicate fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredicateOutcome {
    pub predicate: Predicate,
    pub holds: bool,
    pub first_violation: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PredicateReport {
    pub outcomes: Vec<PredicateOutcome>,
}

impl PredicateReport {
    pub fn evaluate(predicates: &[Predicate], a: &[i64]) -> Result<Self> {
        Ok(PredicateReport {
            outcomes: predicates
                .iter()
                .map(|p| p.evaluate(a))
                .collect::<Result<_>>()?,
        })
    }

    pub fn all_hold(&self) -> bool {
        self.outcomes.iter().all(|o| o.holds)
    }
}

fn nonempty(a: &[i64]) -> Result<usize> {
    if a.is_empty() {
        return Err(Error::EmptySequence);
    }
    Ok(a.len() - 1)
}

/// Weakly rises to some peak, then weakly falls. Reports the first rise
/// after a fall.
pub fn unimodal_violation(a: &[i64]) -> Result<Option<usize>> {
    nonempty(a)?;
    let mut falling = false;
    for i in 1..a.len() {
        if a[i] < a[i - 1] {
            falling = true;
        } else if a[i] > a[i - 1] && falling {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// `a_i <= a_{s-i}` for `i <= s/2`.
pub fn flawless_violation(a: &[i64]) -> Result<Option<usize>> {
    let s = nonempty(a)?;
    Ok((0..=s / 2).find(|&i| a[i] > a[s - i]))
}

/// `a_i <= a_j` whenever `i <= j <= s - i`.
pub fn strongly_flawless_violation(a: &[i64]) -> Result<Option<usize>> {
    let s = nonempty(a)?;
    Ok((0..=s / 2).find(|&i| (i..=s - i).any(|j| a[i] > a[j])))
}

pub fn symmetric_violation(a: &[i64]) -> Result<Option<usize>> {
    let s = nonempty(a)?;
    Ok((0..=s / 2).find(|&i| a[i] != a[s - i]))
}

/// `a_j^2 >= a_{j-1} a_{j+1}` at interior `j`.
pub fn log_concave_violation(a: &[i64]) -> Result<Option<usize>> {
    let s = nonempty(a)?;
    Ok((1..s).find(|&j| {
        let (l, m, r) = (a[j - 1] as i128, a[j] as i128, a[j + 1] as i128);
        m * m < l * r
    }))
}

/// Log-concavity of `a_i / C(a_1 + i - 1, i)`, in exact rationals.
pub fn strongly_log_concave_violation(a: &[i64]) -> Result<Option<usize>> {
    let s = nonempty(a)?;
    if a[0] != 1 {
        return Err(Error::NotStartingAtOne);
    }
    if a.iter().any(|&x| x < 0) {
        return Err(Error::BadParameters("negative entries".into()));
    }
    let a1 = a.get(1).copied().unwrap_or(0);
    let scaled = a
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let b = if i == 0 {
                1
            } else {
                binomial(a1 + i as i64 - 1, i as i64)
            };
            match (b, x) {
                (0, 0) => Ok(BigRational::from_integer(BigInt::from(0))),
                (0, _) => Err(Error::BadParameters(format!(
                    "entry {i} is nonzero but its normalizer vanishes"
                ))),
                _ => Ok(BigRational::new(BigInt::from(x), BigInt::from(b))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((1..s).find(|&j| &scaled[j] * &scaled[j] < &scaled[j - 1] * &scaled[j + 1]))
}

/// Macaulay representation `a = C(k_i, i) + C(k_{i-1}, i-1) + ... + C(k_j, j)`
/// with `k_i > k_{i-1} > ... > k_j >= j >= 1`, as `(k, level)` pairs.
pub fn macaulay_representation(mut a: i64, i: usize) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    let mut level = i as i64;
    while a > 0 && level >= 1 {
        let mut k = level;
        while binomial(k + 1, level) <= a {
            k += 1;
        }
        a -= binomial(k, level);
        out.push((k, level));
        level -= 1;
    }
    out
}

/// `a^<i>`: shift every term of the Macaulay representation up one level.
pub fn macaulay_pseudo_power(a: i64, i: usize) -> i64 {
    macaulay_representation(a, i)
        .into_iter()
        .map(|(k, level)| binomial(k + 1, level + 1))
        .sum()
}

/// Macaulay's growth bound: `a_0 = 1` and `a_{i+1} <= a_i^<i>` for `i >= 1`.
/// A negative entry is itself a violation.
pub fn o_sequence_violation(a: &[i64]) -> Result<Option<usize>> {
    nonempty(a)?;
    if a[0] != 1 {
        return Err(Error::NotStartingAtOne);
    }
    if let Some(i) = a.iter().position(|&x| x < 0) {
        return Ok(Some(i));
    }
    Ok((1..a.len().saturating_sub(1))
        .find(|&i| a[i + 1] > macaulay_pseudo_power(a[i], i))
        .map(|i| i + 1))
}

pub fn is_unimodal(a: &[i64]) -> Result<bool> {
    Ok(unimodal_violation(a)?.is_none())
}

pub fn is_flawless(a: &[i64]) -> Result<bool> {
    Ok(flawless_violation(a)?.is_none())
}

pub fn is_strongly_flawless(a: &[i64]) -> Result<bool> {
    Ok(strongly_flawless_violation(a)?.is_none())
}

pub fn is_symmetric(a: &[i64]) -> Result<bool> {
    Ok(symmetric_violation(a)?.is_none())
}

pub fn is_log_concave(a: &[i64]) -> Result<bool> {
    Ok(log_concave_violation(a)?.is_none())
}

pub fn is_strongly_log_concave(a: &[i64]) -> Result<bool> {
    Ok(strongly_log_concave_violation(a)?.is_none())
}

pub fn is_o_sequence(a: &[i64]) -> Result<bool> {
    Ok(o_sequence_violation(a)?.is_none())
}
