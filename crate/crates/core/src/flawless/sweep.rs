//! Evaluation of predicates and checks over a finite family.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::invariants::h_vector;
use crate::matroid::Matroid;

use super::checks::{CheckOutcome, Lemma};
use super::complementary::{ComplementaryHVector, GVector};
use super::sequence::{Predicate, PredicateOutcome};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepConfig {
    pub predicates: Vec<Predicate>,
    pub lemmas: Vec<Lemma>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepItem {
    pub id: String,
    pub size: usize,
    pub rank: usize,
    pub connected: bool,
    /// Trimmed; absent for a matroid with a loop.
    pub h: Option<Vec<i64>>,
    pub h_bar: Vec<i64>,
    pub g: Option<Vec<i64>>,
    pub predicates: Vec<PredicateOutcome>,
    pub lemmas: Vec<CheckOutcome>,
    /// Whether "unimodal and flawless" agrees with "strongly flawless".
    pub flawless_equivalence: bool,
    pub error: Option<String>,
}

impl SweepItem {
    pub fn is_counterexample(&self) -> bool {
        self.error.is_some()
            || !self.flawless_equivalence
            || self.predicates.iter().any(|p| !p.holds)
            || self.lemmas.iter().any(|l| !l.passed)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub items: usize,
    pub predicate_violations: BTreeMap<String, usize>,
    pub lemma_failures: BTreeMap<String, usize>,
    pub lemma_cases: BTreeMap<String, usize>,
    pub equivalence_mismatches: usize,
    pub errors: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub items: Vec<SweepItem>,
    pub summary: SweepSummary,
    pub first_counterexample: Option<SweepItem>,
    /// Wall-clock microseconds per item, parallel to `items`. Kept out of
    /// the serialized report so that it stays deterministic.
    #[serde(skip)]
    pub timings_us: Vec<u64>,
}

impl SweepReport {
    pub fn clean(&self) -> bool {
        self.first_counterexample.is_none()
    }
}

/// Predicates run on the trimmed h-vector, except the O-sequence test,
/// which runs on the g-vector. A matroid with a loop has `hbar = (0)` and
/// every predicate holds vacuously.
pub fn evaluate(id: &str, m: &Matroid, config: &SweepConfig) -> SweepItem {
    let mut item = SweepItem {
        id: id.to_string(),
        size: m.len(),
        rank: m.rank(),
        connected: m.is_connected(),
        h: None,
        h_bar: vec![0],
        g: None,
        predicates: Vec::new(),
        lemmas: config.lemmas.iter().map(|l| l.check(m)).collect(),
        flawless_equivalence: true,
        error: None,
    };
    let vacuous = |p: &Predicate| PredicateOutcome {
        predicate: *p,
        holds: true,
        first_violation: None,
    };
    if m.has_loops() {
        item.predicates = config.predicates.iter().map(vacuous).collect();
        return item;
    }
    let h = match h_vector(m) {
        Ok(h) => h.trimmed().to_vec(),
        Err(e) => {
            item.error = Some(e.to_string());
            return item;
        }
    };
    let g = GVector::from_trimmed(&h).entries;
    item.h_bar = ComplementaryHVector::from_trimmed(&h).entries;
    let outcomes: Result<Vec<_>, _> = config
        .predicates
        .iter()
        .map(|p| match p {
            Predicate::OSequence => p.evaluate(&g),
            _ => p.evaluate(&h),
        })
        .collect();
    match outcomes {
        Ok(o) => item.predicates = o,
        Err(e) => item.error = Some(e.to_string()),
    }
    let holds = |p: Predicate| p.evaluate(&h).map(|o| o.holds).unwrap_or(false);
    item.flawless_equivalence = (holds(Predicate::Unimodal) && holds(Predicate::Flawless))
        == holds(Predicate::StronglyFlawless);
    item.h = Some(h);
    item.g = Some(g);
    item
}

/// Evaluates every member in parallel; the report keeps family order.
pub fn sweep(family: &[(String, Matroid)], config: &SweepConfig) -> SweepReport {
    let results: Vec<(SweepItem, u64)> = family
        .par_iter()
        .map(|(id, m)| {
            let start = Instant::now();
            let item = evaluate(id, m, config);
            (item, start.elapsed().as_micros() as u64)
        })
        .collect();
    let (items, timings_us): (Vec<_>, Vec<_>) = results.into_iter().unzip();
    let mut summary = SweepSummary {
        items: items.len(),
        ..Default::default()
    };
    for p in &config.predicates {
        summary.predicate_violations.insert(p.name().into(), 0);
    }
    for l in &config.lemmas {
        summary.lemma_failures.insert(l.name().into(), 0);
        summary.lemma_cases.insert(l.name().into(), 0);
    }
    for item in &items {
        for p in item.predicates.iter().filter(|p| !p.holds) {
            *summary
                .predicate_violations
                .entry(p.predicate.name().into())
                .or_default() += 1;
        }
        for l in &item.lemmas {
            *summary
                .lemma_cases
                .entry(l.lemma.name().into())
                .or_default() += l.cases;
            if !l.passed {
                *summary
                    .lemma_failures
                    .entry(l.lemma.name().into())
                    .or_default() += 1;
            }
        }
        summary.equivalence_mismatches += usize::from(!item.flawless_equivalence);
        summary.errors += usize::from(item.error.is_some());
    }
    let first_counterexample = items.iter().find(|i| i.is_counterexample()).cloned();
    SweepReport {
        items,
        summary,
        first_counterexample,
        timings_us,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::Family;

    #[test]
    fn uniform_sweep_is_clean() {
        let family = Family::Uniform { max_n: 5 }.members().unwrap();
        let config = SweepConfig {
            predicates: Predicate::ALL
                .into_iter()
                .filter(|p| *p != Predicate::Symmetric)
                .collect(),
            lemmas: vec![Lemma::HSupport],
        };
        let report = sweep(&family, &config);
        assert!(report.clean(), "{:?}", report.first_counterexample);
        assert_eq!(report.items.len(), family.len());
        assert_eq!(report.timings_us.len(), family.len());
        for (item, (id, _)) in report.items.iter().zip(&family) {
            assert_eq!(&item.id, id);
        }
    }

    #[test]
    fn deterministic() {
        let family = Family::Graphic { max_edges: 4 }.members().unwrap();
        let config = SweepConfig {
            predicates: vec![Predicate::StronglyFlawless],
            lemmas: vec![Lemma::Series2],
        };
        let (a, b) = (sweep(&family, &config), sweep(&family, &config));
        assert_eq!(a.items, b.items);
        assert_eq!(a.summary, b.summary);
        assert_eq!(a.first_counterexample, b.first_counterexample);
    }
}
