//! Acceptance criteria, one line each. Exits nonzero if any criterion fails
//! or overruns its time limit.

use std::io::Write;
use std::panic;
use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::Value;

use flawless_core::constructions::{uniform, Family};
use flawless_core::flawless::{product_grid, sweep, Lemma, Predicate, SweepConfig};
use flawless_core::invariants::{
    bc_f_vector, char_poly_subset_expansion, characteristic_polynomial, h_vector, h_vector_via_f,
    tutte, tutte_subset_expansion,
};
use flawless_core::{LinearOrder, Matroid};

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

const K23_GRAPH: &str = "# K_{2,3}: top 1, bottom 2, middle 3 4 5\n\
1 3 1\n3 2 2\n1 4 3\n1 5 4\n5 2 5\n4 2 6\n";

fn graphic_corpus() -> Vec<(String, Matroid)> {
    Family::Graphic { max_edges: 7 }.members().unwrap()
}

/// Connected multigraphs on at most 7 edges and `U(r, n)` for `n <= 8`.
fn corpus() -> Vec<(String, Matroid)> {
    let mut all = graphic_corpus();
    all.extend(Family::Uniform { max_n: 8 }.members().unwrap());
    all
}

fn ints(v: &Value) -> Vec<i64> {
    v.as_array()
        .map(|a| a.iter().filter_map(Value::as_i64).collect())
        .unwrap_or_default()
}

fn k23_example() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("k23.graph");
    std::fs::write(&path, K23_GRAPH).map_err(|e| e.to_string())?;
    let out = Command::new(env!("CARGO_BIN_EXE_flawless"))
        .args(["invariants", "--series", "1,2", "--at", "1", "--no-timings"])
        .arg(&path)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "exit {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    let doc: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let r = &doc["result"];
    let got = [
        ("h(M)", ints(&r["h_vector"]["trimmed"]), vec![1, 2, 3, 1]),
        ("h(M~)", ints(&r["series"]["h_tilde"]), vec![1, 2, 1]),
        ("h(M-S)", ints(&r["series"]["h_minus_class"]), vec![1, 1, 1]),
        ("h(M/S)", ints(&r["series"]["h_over_class"]), vec![1]),
        ("hbar(M)", ints(&r["h_bar"]), vec![0, 1]),
    ];
    for (name, g, want) in &got {
        if g != want {
            return Err(format!("{name} = {g:?}, expected {want:?}"));
        }
    }
    Ok("h = (1,2,3,1), h(M~) = (1,2,1), h(M-S) = (1,1,1), h(M/S) = (1), hbar = (0,1)".into())
}

fn circuit_h_polynomials() -> Outcome {
    for r in 1..=8 {
        let h =
            h_vector(&uniform(r, r + 1).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        if h.trimmed() != vec![1; r] {
            return Err(format!("U({r},{}) has h = {:?}", r + 1, h.trimmed()));
        }
    }
    Ok("U(r,r+1) has trimmed h = (1,...,1) of length r for r = 1..8".into())
}

fn whitney_rota() -> Outcome {
    let corpus = corpus();
    for (id, m) in &corpus {
        let a = characteristic_polynomial(m).map_err(|e| format!("{id}: {e}"))?;
        let b = char_poly_subset_expansion(m).map_err(|e| format!("{id}: {e}"))?;
        if a != b {
            return Err(format!("{id}: {a} vs {b}"));
        }
    }
    Ok(format!("{} matroids", corpus.len()))
}

fn tutte_consistency() -> Outcome {
    let corpus = corpus();
    for (id, m) in &corpus {
        let t = tutte(m);
        if t != tutte_subset_expansion(m).map_err(|e| format!("{id}: {e}"))? {
            return Err(format!(
                "{id}: memoized Tutte differs from the subset expansion"
            ));
        }
        let h = h_vector_via_f(m)
            .map_err(|e| format!("{id}: {e}"))?
            .polynomial();
        if t.at_y_zero() != h {
            return Err(format!(
                "{id}: T(M;t,0) = {} but h(M;t) = {h}",
                t.at_y_zero()
            ));
        }
    }
    Ok(format!("{} matroids", corpus.len()))
}

fn order_invariance() -> Outcome {
    let mut checked = 0;
    let mut orders = 0;
    for (id, m) in corpus().iter().filter(|(_, m)| m.len() <= 6) {
        let reference =
            bc_f_vector(m, &LinearOrder::natural(m.len())).map_err(|e| e.to_string())?;
        for order in LinearOrder::all(m.len()) {
            if bc_f_vector(m, &order).map_err(|e| e.to_string())? != reference {
                return Err(format!("{id}: order {:?} changes f", order.sequence()));
            }
            orders += 1;
        }
        checked += 1;
    }
    Ok(format!("{checked} matroids, {orders} orders"))
}

fn run_lemmas(
    corpus: &[(String, Matroid)],
    lemmas: &[Lemma],
) -> (Vec<String>, Vec<(Lemma, usize, usize)>) {
    let report = sweep(
        corpus,
        &SweepConfig {
            predicates: Vec::new(),
            lemmas: lemmas.to_vec(),
        },
    );
    let mut failures = Vec::new();
    let mut totals: Vec<(Lemma, usize, usize)> = lemmas.iter().map(|&l| (l, 0, 0)).collect();
    for item in &report.items {
        for (k, o) in item.lemmas.iter().enumerate() {
            totals[k].1 += o.cases;
            totals[k].2 += o.skipped;
            if !o.passed {
                failures.push(format!(
                    "{} {}: {}",
                    o.lemma,
                    item.id,
                    o.detail.clone().unwrap_or_default()
                ));
            }
        }
    }
    (failures, totals)
}

fn describe(totals: &[(Lemma, usize, usize)]) -> String {
    totals
        .iter()
        .map(|(l, c, s)| format!("{l} {c} cases/{s} skipped"))
        .collect::<Vec<_>>()
        .join(", ")
}

fn series_identities() -> Outcome {
    let connected: Vec<_> = graphic_corpus()
        .into_iter()
        .filter(|(_, m)| m.is_connected())
        .collect();
    let (failures, totals) = run_lemmas(&connected, &[Lemma::Series1, Lemma::Series2]);
    if failures.is_empty() {
        return Ok(format!(
            "{} connected matroids; {}",
            connected.len(),
            describe(&totals)
        ));
    }
    let (alt, _) = run_lemmas(&connected, &[Lemma::Series1Unclipped]);
    Err(format!(
        "{} matroid(s) fail, first: {}; with the minors' hbar unclipped: {} failure(s); {}",
        failures.len(),
        failures[0],
        alt.len(),
        describe(&totals)
    ))
}

fn two_sum_reconstruction() -> Outcome {
    let corpus = corpus();
    let (failures, totals) = run_lemmas(&corpus, &[Lemma::TwoSum]);
    match failures.first() {
        None => Ok(format!(
            "{} matroids; {} (skipped: S a circuit, basepoint a loop of M/(S-e), or M has a loop)",
            corpus.len(),
            describe(&totals)
        )),
        Some(f) => Err(format!("{} failure(s), first: {f}", failures.len())),
    }
}

fn product_grid_check() -> Outcome {
    let (pairs, bad) = product_grid(4, 3).map_err(|e| e.to_string())?;
    match bad {
        None => Ok(format!("{pairs} pairs")),
        Some((a, b)) => Err(format!("{a:?} * {b:?} is not strongly flawless")),
    }
}

fn desk_sweep() -> Outcome {
    let corpus = corpus();
    let report = sweep(
        &corpus,
        &SweepConfig {
            predicates: vec![Predicate::StronglyFlawless],
            lemmas: Vec::new(),
        },
    );
    let violations = report
        .summary
        .predicate_violations
        .get("strongly-flawless")
        .copied()
        .unwrap_or(0);
    if violations == 0 && report.summary.errors == 0 && report.summary.equivalence_mismatches == 0 {
        Ok(format!("{} matroids, 0 violations", corpus.len()))
    } else {
        Err(format!(
            "{violations} violation(s), {} error(s), first: {:?}",
            report.summary.errors,
            report.first_counterexample.map(|i| i.id)
        ))
    }
}

fn property_suites() -> Outcome {
    let corpus = corpus();
    let lemmas = [
        Lemma::HSupport,
        Lemma::DeletionContraction,
        Lemma::DirectSum,
        Lemma::Parallel,
        Lemma::SeriesMinors,
    ];
    let (failures, totals) = run_lemmas(&corpus, &lemmas);
    match failures.first() {
        None => Ok(format!("{} matroids; {}", corpus.len(), describe(&totals))),
        Some(f) => Err(format!("{} failure(s), first: {f}", failures.len())),
    }
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("K_{2,3} worked example", 1, k23_example),
        ("circuit h-polynomials", 1, circuit_h_polynomials),
        ("Whitney-Rota oracle", 60, whitney_rota),
        ("Tutte consistency", 120, tutte_consistency),
        ("order invariance", 60, order_invariance),
        ("series class identities for hbar", 120, series_identities),
        ("2-sum reconstruction", 60, two_sum_reconstruction),
        ("strongly flawless product grid", 10, product_grid_check),
        ("strongly flawless desk sweep", 120, desk_sweep),
        (
            "h-vector and series minor property suites",
            120,
            property_suites,
        ),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(limit);
        let (status, detail) = match outcome {
            Ok(msg) if elapsed <= limit => ("PASS", msg),
            Ok(msg) => ("FAIL", format!("over time limit; {msg}")),
            Err(msg) => ("FAIL", msg),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {:>2} {status} {name} [{:.2}s / {}s]: {detail}",
            k + 1,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
        std::io::stdout().flush().ok();
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
