//! Report documents. Field names are frozen in `schema/report.schema.json`.

use std::collections::BTreeMap;

use serde::Serialize;
use sha2::{Digest, Sha256};

use flawless_core::constructions::Family;
use flawless_core::flawless::{
    check_series1, check_series2, complementary_h, sweep, CheckOutcome, ComplementaryHVector,
    GVector, IdentityReport, Lemma, Predicate, PredicateOutcome, SweepConfig, SweepItem,
    SweepSummary,
};
use flawless_core::invariants::{
    bc_f_vector, broken_circuits, characteristic_polynomial, h_vector, h_vector_via_f,
    h_vector_via_tutte, tutte,
};
use flawless_core::{BivariatePolynomial, IntPolynomial, Label, LinearOrder, Matroid};

pub const SCHEMA: &str = "flawless-report/1";

#[derive(Serialize)]
pub struct Report<T: Serialize> {
    pub schema: &'static str,
    pub tool_version: &'static str,
    pub command: &'static str,
    pub input_digest: String,
    pub warnings: Vec<String>,
    pub result: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

impl<T: Serialize> Report<T> {
    pub fn new(command: &'static str, input_digest: String, result: T) -> Self {
        Report {
            schema: SCHEMA,
            tool_version: env!("CARGO_PKG_VERSION"),
            command,
            input_digest,
            warnings: Vec::new(),
            result,
            timings: None,
        }
    }
}

#[derive(Serialize, Default)]
pub struct Timings {
    pub total_ms: f64,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub phases_ms: BTreeMap<String, f64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub items_us: Vec<u64>,
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

fn trimmed(m: &Matroid) -> flawless_core::Result<Vec<i64>> {
    if m.has_loops() {
        return Ok(Vec::new());
    }
    Ok(h_vector(m)?.trimmed().to_vec())
}

#[derive(Serialize)]
pub struct HRoutes {
    pub via_f: Vec<i64>,
    pub via_tutte: Vec<i64>,
    pub trimmed: Vec<i64>,
}

/// A checker result or the precondition it rejected.
#[derive(Serialize)]
pub struct Checked {
    pub report: Option<IdentityReport>,
    pub error: Option<String>,
}

impl Checked {
    fn of(r: flawless_core::Result<IdentityReport>) -> Self {
        match r {
            Ok(report) => Checked {
                report: Some(report),
                error: None,
            },
            Err(e) => Checked {
                report: None,
                error: Some(e.to_string()),
            },
        }
    }

    pub fn failed(&self) -> bool {
        self.report.as_ref().is_some_and(|r| !r.holds)
    }
}

#[derive(Serialize)]
pub struct SeriesResult {
    pub class: Vec<Label>,
    pub element: Label,
    /// Trimmed h-vectors of `M/(S-e)`, `M-S` and `M/S`; empty if loopy.
    pub h_tilde: Vec<i64>,
    pub h_minus_class: Vec<i64>,
    pub h_over_class: Vec<i64>,
    pub series1: Checked,
    pub series2: Checked,
}

#[derive(Serialize)]
pub struct InvariantsResult {
    pub ground: Vec<Label>,
    pub size: usize,
    pub rank: usize,
    pub components: usize,
    pub loops: Vec<Label>,
    pub order: Vec<Label>,
    pub broken_circuits: Option<Vec<Vec<Label>>>,
    pub f_vector: Option<Vec<i64>>,
    pub h_vector: Option<HRoutes>,
    pub h_bar: Vec<i64>,
    pub g_vector: Option<Vec<i64>>,
    pub characteristic_polynomial: IntPolynomial,
    pub tutte: BivariatePolynomial,
    pub series: Option<SeriesResult>,
}

pub fn series_result(
    m: &Matroid,
    class: &[Label],
    e: &Label,
) -> flawless_core::Result<SeriesResult> {
    let others: Vec<Label> = class.iter().filter(|x| *x != e).cloned().collect();
    Ok(SeriesResult {
        class: class.to_vec(),
        element: e.clone(),
        h_tilde: trimmed(&m.contract(&others)?)?,
        h_minus_class: trimmed(&m.delete(class)?)?,
        h_over_class: trimmed(&m.contract(class)?)?,
        series1: Checked::of(check_series1(m, class, e)),
        series2: Checked::of(check_series2(m, class, e)),
    })
}

/// Everything computable for one matroid; phases timed into `phases`.
pub fn invariants(
    m: &Matroid,
    order: &LinearOrder,
    phases: &mut BTreeMap<String, f64>,
) -> flawless_core::Result<(InvariantsResult, Vec<String>)> {
    let mut warnings = Vec::new();
    let mut timed = |name: &str, start: std::time::Instant| {
        phases.insert(name.to_string(), start.elapsed().as_secs_f64() * 1e3);
    };
    let start = std::time::Instant::now();
    let t = tutte(m);
    timed("tutte", start);
    let mut result = InvariantsResult {
        ground: m.ground().labels().to_vec(),
        size: m.len(),
        rank: m.rank(),
        components: m.component_masks().len(),
        loops: m.loops(),
        order: order.labels(m.ground()),
        broken_circuits: None,
        f_vector: None,
        h_vector: None,
        h_bar: vec![0],
        g_vector: None,
        characteristic_polynomial: IntPolynomial::zero(),
        tutte: t,
        series: None,
    };
    if m.has_loops() {
        warnings.push(format!(
            "matroid has loops {:?}; its broken circuit complex is empty and hbar = (0)",
            result
                .loops
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
        ));
        return Ok((result, warnings));
    }
    let start = std::time::Instant::now();
    let bc = broken_circuits(m, order)?;
    let f = bc_f_vector(m, order)?;
    timed("f_vector", start);
    let start = std::time::Instant::now();
    let via_f = h_vector_via_f(m)?;
    let via_tutte = h_vector_via_tutte(m)?;
    let h = h_vector(m)?;
    timed("h_vector", start);
    result.broken_circuits = Some(bc.iter().map(|&b| m.ground().labels_of(b)).collect());
    result.f_vector = Some(f.counts);
    result.h_bar = complementary_h(m)?.entries;
    result.g_vector = Some(GVector::from_trimmed(h.trimmed()).entries);
    result.characteristic_polynomial = characteristic_polynomial(m)?;
    result.h_vector = Some(HRoutes {
        via_f: via_f.full,
        via_tutte: via_tutte.full,
        trimmed: h.trimmed().to_vec(),
    });
    Ok((result, warnings))
}

#[derive(Serialize)]
pub struct CheckResult {
    pub h_vector: Option<Vec<i64>>,
    pub h_bar: Vec<i64>,
    pub g_vector: Option<Vec<i64>>,
    pub predicates: Vec<PredicateOutcome>,
    pub passed: bool,
}

pub fn check(
    m: &Matroid,
    predicates: &[Predicate],
) -> flawless_core::Result<(CheckResult, Vec<String>)> {
    let item = flawless_core::flawless::evaluate(
        "input",
        m,
        &SweepConfig {
            predicates: predicates.to_vec(),
            lemmas: Vec::new(),
        },
    );
    if let Some(e) = item.error {
        return Err(flawless_core::Error::InternalInconsistency(e));
    }
    let mut warnings = Vec::new();
    if m.has_loops() {
        warnings.push("matroid has loops; hbar = (0) and every predicate holds vacuously".into());
    }
    let passed = item.predicates.iter().all(|p| p.holds);
    let h_bar = match &item.h {
        Some(h) => ComplementaryHVector::from_trimmed(h).entries,
        None => vec![0],
    };
    Ok((
        CheckResult {
            h_vector: item.h,
            h_bar,
            g_vector: item.g,
            predicates: item.predicates,
            passed,
        },
        warnings,
    ))
}

#[derive(Serialize, Default)]
pub struct LemmaTotals {
    pub cases: usize,
    pub skipped: usize,
    pub failures: usize,
}

#[derive(Serialize)]
pub struct Failure {
    pub id: String,
    pub lemma: Lemma,
    pub detail: Option<String>,
}

#[derive(Serialize)]
pub struct VerifyResult {
    pub family: String,
    pub parameters: BTreeMap<String, usize>,
    pub lemmas: Vec<Lemma>,
    pub members: usize,
    pub totals: BTreeMap<String, LemmaTotals>,
    pub failures: Vec<Failure>,
    pub passed: bool,
}

pub fn parameters(family: &Family) -> BTreeMap<String, usize> {
    let (k, v) = match *family {
        Family::Graphic { max_edges } => ("max_edges", max_edges),
        Family::Uniform { max_n }
        | Family::Wheel { max_n }
        | Family::Complete { max_n }
        | Family::CompleteBipartite { max_n } => ("max_n", max_n),
    };
    BTreeMap::from([(k.to_string(), v)])
}

pub fn verify(
    family: &Family,
    members: &[(String, Matroid)],
    lemmas: &[Lemma],
) -> (VerifyResult, Vec<u64>) {
    let report = sweep(
        members,
        &SweepConfig {
            predicates: Vec::new(),
            lemmas: lemmas.to_vec(),
        },
    );
    let mut totals: BTreeMap<String, LemmaTotals> = lemmas
        .iter()
        .map(|l| (l.name().to_string(), LemmaTotals::default()))
        .collect();
    let mut failures = Vec::new();
    for item in &report.items {
        for o in &item.lemmas {
            let CheckOutcome {
                lemma,
                passed,
                cases,
                skipped,
                detail,
            } = o;
            let t = totals.entry(lemma.name().to_string()).or_default();
            t.cases += cases;
            t.skipped += skipped;
            if !passed {
                t.failures += 1;
                failures.push(Failure {
                    id: item.id.clone(),
                    lemma: *lemma,
                    detail: detail.clone(),
                });
            }
        }
    }
    (
        VerifyResult {
            family: family.name().to_string(),
            parameters: parameters(family),
            lemmas: lemmas.to_vec(),
            members: members.len(),
            passed: failures.is_empty(),
            totals,
            failures,
        },
        report.timings_us,
    )
}

#[derive(Serialize)]
pub struct SweepResult {
    pub family: String,
    pub parameters: BTreeMap<String, usize>,
    pub predicates: Vec<Predicate>,
    pub lemmas: Vec<Lemma>,
    pub items: Vec<SweepItem>,
    pub summary: SweepSummary,
    pub first_counterexample: Option<SweepItem>,
    pub clean: bool,
}

pub fn sweep_family(
    family: &Family,
    members: &[(String, Matroid)],
    predicates: &[Predicate],
    lemmas: &[Lemma],
) -> (SweepResult, Vec<u64>) {
    let report = sweep(
        members,
        &SweepConfig {
            predicates: predicates.to_vec(),
            lemmas: lemmas.to_vec(),
        },
    );
    (
        SweepResult {
            family: family.name().to_string(),
            parameters: parameters(family),
            predicates: predicates.to_vec(),
            lemmas: lemmas.to_vec(),
            clean: report.clean(),
            items: report.items,
            summary: report.summary,
            first_counterexample: report.first_counterexample,
        },
        report.timings_us,
    )
}
