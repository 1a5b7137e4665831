//! Per-matroid property checks used by verification runs and sweeps.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ground::{GroundSet, Label};
use crate::invariants::{
    bc_f_vector, char_poly_subset_expansion, characteristic_polynomial, h_polynomial,
    h_polynomial_any, h_vector_via_f, tutte, tutte_subset_expansion, ORACLE_CAP,
};
use crate::matroid::Matroid;
use crate::order::LinearOrder;
use crate::poly::IntPolynomial;

use super::identities::{
    check_series1, check_series1_unclipped, check_series2, product_strongly_flawless_check, MinorH,
};
use super::sequence::is_strongly_flawless;

/// Largest ground set on which every linear order is tried.
pub const ORDER_INVARIANCE_CAP: usize = 6;
/// Largest ground set glued to a relabeled copy of itself.
pub const SELF_GLUE_CAP: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Lemma {
    /// hbar across a non-trivial removable series class.
    Series1,
    /// As `Series1`, with the minors' hbar read past half their top index.
    Series1Unclipped,
    /// Piecewise hbar formula through `M/(S-e)` and `M/S`.
    Series2,
    /// `M` rebuilt as `M/(S-e)` 2-summed with a circuit.
    TwoSum,
    /// h-polynomial deletion-contraction and connectivity of a minor.
    DeletionContraction,
    /// Rank, connectivity and h-vector facts along a series class.
    SeriesMinors,
    /// Contracting the basepoint of a parallel connection; product rule.
    Parallel,
    /// Product rule for direct sums.
    DirectSum,
    /// Nonnegativity and top index of h; circuits have all-ones h.
    HSupport,
    /// hbar expansion over `M-e`, `M/e` when both are connected.
    Expansion,
    /// Existence of removable series classes.
    Removable,
    /// Characteristic polynomial against the subset expansion.
    WhitneyRota,
    /// Tutte polynomial against subset expansion, duality and specializations.
    Tutte,
    /// f-vector of the broken circuit complex under every linear order.
    OrderInvariance,
    /// Products of strongly flawless h-polynomials.
    Product,
}

impl Lemma {
    pub const ALL: [Lemma; 15] = [
        Lemma::Series1,
        Lemma::Series1Unclipped,
        Lemma::Series2,
        Lemma::TwoSum,
        Lemma::DeletionContraction,
        Lemma::SeriesMinors,
        Lemma::Parallel,
        Lemma::DirectSum,
        Lemma::HSupport,
        Lemma::Expansion,
        Lemma::Removable,
        Lemma::WhitneyRota,
        Lemma::Tutte,
        Lemma::OrderInvariance,
        Lemma::Product,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Lemma::Series1 => "series1",
            Lemma::Series1Unclipped => "series1-unclipped",
            Lemma::Series2 => "series2",
            Lemma::TwoSum => "two-sum",
            Lemma::DeletionContraction => "deletion-contraction",
            Lemma::SeriesMinors => "series-minors",
            Lemma::Parallel => "parallel",
            Lemma::DirectSum => "direct-sum",
            Lemma::HSupport => "h-support",
            Lemma::Expansion => "expansion",
            Lemma::Removable => "removable",
            Lemma::WhitneyRota => "whitney-rota",
            Lemma::Tutte => "tutte",
            Lemma::OrderInvariance => "order-invariance",
            Lemma::Product => "product",
        }
    }

    /// Runs the check. Computation errors count as failures.
    pub fn check(&self, m: &Matroid) -> CheckOutcome {
        let mut t = Tally::default();
        let run = match self {
            Lemma::Series1 => series1(m, &mut t, false),
            Lemma::Series1Unclipped => series1(m, &mut t, true),
            Lemma::Series2 => series2(m, &mut t),
            Lemma::TwoSum => two_sum(m, &mut t),
            Lemma::DeletionContraction => deletion_contraction(m, &mut t),
            Lemma::SeriesMinors => series_minors(m, &mut t),
            Lemma::Parallel => parallel(m, &mut t),
            Lemma::DirectSum => direct_sum(m, &mut t),
            Lemma::HSupport => h_support(m, &mut t),
            Lemma::Expansion => expansion(m, &mut t),
            Lemma::Removable => removable(m, &mut t),
            Lemma::WhitneyRota => whitney_rota(m, &mut t),
            Lemma::Tutte => tutte_checks(m, &mut t),
            Lemma::OrderInvariance => order_invariance(m, &mut t),
            Lemma::Product => product(m, &mut t),
        };
        if let Err(e) = run {
            t.fail(|| format!("error: {e}"));
        }
        CheckOutcome {
            lemma: *self,
            passed: t.failure.is_none(),
            cases: t.cases,
            skipped: t.skipped,
            detail: t.failure,
        }
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Lemma {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Lemma::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::BadParameters(format!("unknown lemma `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub lemma: Lemma,
    pub passed: bool,
    /// Instances actually checked.
    pub cases: usize,
    /// Instances outside the hypotheses of the statement.
    pub skipped: usize,
    /// First failure.
    pub detail: Option<String>,
}

#[derive(Default)]
struct Tally {
    cases: usize,
    skipped: usize,
    failure: Option<String>,
}

impl Tally {
    fn case(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(detail);
        }
    }

    fn fail(&mut self, detail: impl FnOnce() -> String) {
        if self.failure.is_none() {
            self.failure = Some(detail());
        }
    }
}

fn show(labels: &[Label]) -> String {
    let parts: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn single(e: &Label) -> &[Label] {
    std::slice::from_ref(e)
}

/// Trimmed h-vector, empty for a matroid with a loop.
fn h_trimmed(m: &Matroid) -> Result<Vec<i64>> {
    let h = MinorH::of(m)?;
    let end = h.full.iter().rposition(|&x| x != 0).map_or(0, |s| s + 1);
    Ok(h.full[..end].to_vec())
}

/// A suffix of primes longer than any run of primes ending a label of
/// `ground`, so suffixed labels are fresh.
fn fresh_suffix(grounds: &[&GroundSet]) -> String {
    let longest = grounds
        .iter()
        .flat_map(|g| g.labels())
        .map(|l| l.as_str().chars().rev().take_while(|&c| c == '\'').count())
        .max()
        .unwrap_or(0);
    "'".repeat(longest + 1)
}

/// A copy of `m` with every label except `keep` freshly renamed.
fn fresh_copy(m: &Matroid, keep: Option<&Label>) -> Result<Matroid> {
    let suffix = fresh_suffix(&[m.ground()]);
    m.relabel(|l| {
        if Some(l) == keep {
            l.clone()
        } else {
            Label::new(format!("{l}{suffix}"))
        }
    })
}

/// An `(k+1)`-circuit on `e` and `k` fresh labels.
fn fresh_circuit(m: &Matroid, e: Option<&Label>, k: usize) -> Result<Matroid> {
    let suffix = fresh_suffix(&[m.ground()]);
    let mut labels: Vec<Label> = (1..=k)
        .map(|i| Label::new(format!("c{i}{suffix}")))
        .collect();
    labels.extend(e.cloned());
    Matroid::circuit(GroundSet::new(labels)?)
}

fn series1(m: &Matroid, t: &mut Tally, unclipped: bool) -> Result<()> {
    if !m.is_connected() || m.len() < 2 {
        t.skipped += 1;
        return Ok(());
    }
    for s in m.removable_series_classes()? {
        if s.len() < 2 {
            continue;
        }
        for e in &s {
            let r = if unclipped {
                check_series1_unclipped(m, &s, e)?
            } else {
                check_series1(m, &s, e)?
            };
            t.case(r.holds, || {
                format!(
                    "S={} e={e} i={:?} {:?}",
                    show(&s),
                    r.first_violation,
                    r.failure
                )
            });
        }
    }
    Ok(())
}

fn series2(m: &Matroid, t: &mut Tally) -> Result<()> {
    if !m.is_connected() || m.has_loops() {
        t.skipped += 1;
        return Ok(());
    }
    for s in m.series_classes()?.classes() {
        for e in &s.elements {
            let r = check_series2(m, &s.elements, e)?;
            t.case(r.holds, || {
                format!(
                    "S={} e={e} i={:?} {:?}",
                    show(&s.elements),
                    r.first_violation,
                    r.failure
                )
            });
        }
    }
    Ok(())
}

/// `M/(S-e)` 2-summed at `e` with a circuit on `e` and fresh copies `S'` of
/// `S`; renaming `S'` back to `S` must give `M` exactly.
fn two_sum(m: &Matroid, t: &mut Tally) -> Result<()> {
    if m.has_loops() {
        t.skipped += 1;
        return Ok(());
    }
    let suffix = fresh_suffix(&[m.ground()]);
    for s in m.series_classes()?.classes() {
        for e in &s.elements {
            let rest: Vec<Label> = s.elements.iter().filter(|x| *x != e).cloned().collect();
            let tilde = m.contract(&rest)?;
            if tilde.is_loop(e)? {
                // S is a circuit of M; the basepoint is a loop of M/(S-e).
                t.skipped += 1;
                continue;
            }
            let primed: Vec<Label> = s
                .elements
                .iter()
                .map(|x| Label::new(format!("{x}{suffix}")))
                .collect();
            let mut ground = primed.clone();
            ground.push(e.clone());
            let c = Matroid::circuit(GroundSet::new(ground)?)?;
            let glued = tilde.two_sum(&c, e)?;
            let back = glued.relabel(|l| match primed.iter().position(|p| p == l) {
                Some(k) => s.elements[k].clone(),
                None => l.clone(),
            })?;
            t.case(back == *m, || {
                format!("S={} e={e}: got {back:?}", show(&s.elements))
            });
        }
    }
    Ok(())
}

fn deletion_contraction(m: &Matroid, t: &mut Tally) -> Result<()> {
    if m.has_loops() || m.len() < 2 {
        t.skipped += 1;
        return Ok(());
    }
    let h = h_polynomial(m)?;
    let tm = tutte(m);
    for e in m.ground().labels() {
        let del = m.delete(single(e))?;
        let con = m.contract(single(e))?;
        let (expected, texp) = if m.is_coloop(e)? {
            (
                h_polynomial(&del)?.shift(1),
                &tutte(&del) * &crate::poly::BivariatePolynomial::monomial(1, 1, 0),
            )
        } else {
            (
                &h_polynomial(&del)? + &h_polynomial_any(&con),
                &tutte(&del) + &tutte(&con),
            )
        };
        t.case(h == expected, || format!("h at e={e}: {h} vs {expected}"));
        t.case(tm == texp, || format!("Tutte at e={e}"));
        if m.is_connected() {
            t.case(del.is_connected() || con.is_connected(), || {
                format!("neither M-{e} nor M/{e} is connected")
            });
        }
    }
    Ok(())
}

fn series_minors(m: &Matroid, t: &mut Tally) -> Result<()> {
    if m.has_loops() {
        t.skipped += 1;
        return Ok(());
    }
    let r = m.rank();
    let connected = m.is_connected();
    for s in m.series_classes()?.classes() {
        let size = s.elements.len();
        let tag = show(&s.elements);
        let minus_s = m.delete_mask(s.mask);
        t.case(minus_s.rank() + size == r + 1, || {
            format!("r(M-S) for S={tag}")
        });
        let h_ref = h_trimmed(&minus_s)?;
        for e in &s.elements {
            let h = h_trimmed(&m.delete(single(e))?)?;
            t.case(h == h_ref, || format!("h(M-{e}) != h(M-S) for S={tag}"));
        }
        for j in 0..size {
            let (head, tail) = s.elements.split_at(j);
            let mj = m.contract(head)?;
            t.case(mj.rank() + j == r, || format!("r(M_{j}) for S={tag}"));
            if connected {
                t.case(mj.is_connected(), || {
                    format!("M_{j} disconnected for S={tag}")
                });
            }
            let sj = mj.ground().mask_of(tail)?;
            if mj.has_loops() {
                t.skipped += 1;
            } else {
                let ok = mj.series_classes()?.classes().any(|c| c.mask == sj);
                t.case(ok, || format!("S_{j} not a series class for S={tag}"));
            }
            t.case(mj.delete_mask(sj) == minus_s, || {
                format!("M_{j}-S_{j} != M-S for S={tag}")
            });
            for e in tail {
                let h = h_trimmed(&mj.delete(single(e))?)?;
                t.case(h == h_ref, || format!("h(M_{j}-{e}) != h(M-S) for S={tag}"));
            }
        }
    }
    Ok(())
}

fn parallel(m: &Matroid, t: &mut Tally) -> Result<()> {
    if m.has_loops() {
        t.skipped += 1;
        return Ok(());
    }
    let hm = h_polynomial(m)?;
    for e in m.ground().labels() {
        if m.is_coloop(e)? {
            continue;
        }
        let mut partners = vec![fresh_circuit(m, Some(e), 2)?];
        if m.len() <= SELF_GLUE_CAP {
            partners.push(fresh_copy(m, Some(e))?);
        }
        for other in &partners {
            let p = m.parallel_connection(other, e)?;
            let split = m
                .contract(single(e))?
                .direct_sum(&other.contract(single(e))?)?;
            t.case(p.contract(single(e))? == split, || {
                format!("P/e != M1/e + M2/e at e={e}")
            });
            let lhs = h_polynomial(&p)?.shift(1);
            let rhs = &hm * &h_polynomial(other)?;
            t.case(lhs == rhs, || format!("t h(P) = {lhs} vs {rhs} at e={e}"));
            if m.is_connected() {
                t.case(p.is_connected(), || format!("P disconnected at e={e}"));
            }
        }
        // Converse: a disconnected contraction splits M as a parallel connection.
        if m.is_connected() && m.len() >= 2 {
            let con = m.contract(single(e))?;
            let comps = con.components();
            if comps.len() >= 2 {
                let a = &comps[0];
                let rest: Vec<Label> = comps[1..].concat();
                let m1 = m.delete(&rest)?;
                let m2 = m.delete(a)?;
                let rebuilt = m1.parallel_connection(&m2, e)?;
                t.case(rebuilt == *m, || format!("M is not P(M1, M2) at e={e}"));
            }
        }
    }
    Ok(())
}

fn direct_sum(m: &Matroid, t: &mut Tally) -> Result<()> {
    if m.has_loops() {
        t.skipped += 1;
        return Ok(());
    }
    let hm = h_polynomial(m)?;
    let mut others = vec![fresh_circuit(m, None, 3)?];
    if m.len() <= SELF_GLUE_CAP {
        others.push(fresh_copy(m, None)?);
    }
    for other in &others {
        let sum = m.direct_sum(other)?;
        let lhs = h_polynomial(&sum)?;
        let rhs = &hm * &h_polynomial(other)?;
        t.case(lhs == rhs, || format!("h(M+N) = {lhs} vs {rhs}"));
        t.case(sum.rank() == m.rank() + other.rank(), || {
            "rank not additive".into()
        });
        let comps = sum.component_masks().len();
        t.case(
            comps == m.component_masks().len() + other.component_masks().len(),
            || "components not additive".into(),
        );
    }
    Ok(())
}

fn h_support(m: &Matroid, t: &mut Tally) -> Result<()> {
    if m.has_loops() {
        t.skipped += 1;
        return Ok(());
    }
    let h = h_vector_via_f(m)?;
    t.case(h.full.iter().all(|&x| x >= 0), || {
        format!("negative entry in {:?}", h.full)
    });
    let c = m.component_masks().len();
    t.case(h.s() == Some(m.rank() - c), || {
        format!("top index {:?} but r - c = {}", h.s(), m.rank() - c)
    });
    if m.circuit_masks() == [m.ground().full()] {
        let ones = vec![1; m.rank()];
        t.case(h.trimmed() == ones, || {
            format!("circuit h-vector {:?}", h.trimmed())
        });
    }
    Ok(())
}

/// `hbar_i(M) = hbar_i(M-e) + hbar_i(M/e) + h_i(M/e) - h_{i-1}(M/e)` for
/// `i <= (s-1)/2` when `M`, `M-e` and `M/e` are connected.
fn expansion(m: &Matroid, t: &mut Tally) -> Result<()> {
    if !m.is_connected() || m.len() < 2 {
        t.skipped += 1;
        return Ok(());
    }
    let whole = MinorH::of(m)?;
    let s = whole.hbar.s.unwrap_or(0) as i64;
    for e in m.ground().labels() {
        let del = m.delete(single(e))?;
        let con = m.contract(single(e))?;
        if !del.is_connected() || !con.is_connected() {
            continue;
        }
        let (d, c) = (MinorH::of(&del)?, MinorH::of(&con)?);
        for i in 0..=(s - 1).div_euclid(2) {
            let rhs = d.hbar(i) + c.hbar(i) + c.h(i) - c.h(i - 1);
            t.case(whole.hbar(i) == rhs, || {
                format!("e={e} i={i}: {} vs {rhs}", whole.hbar(i))
            });
        }
    }
    Ok(())
}

fn removable(m: &Matroid, t: &mut Tally) -> Result<()> {
    if !m.is_connected() || m.len() < 2 {
        t.skipped += 1;
        return Ok(());
    }
    let classes = m.removable_series_classes()?;
    t.case(!classes.is_empty(), || "no removable series class".into());
    let minimally = m
        .ground()
        .labels()
        .iter()
        .map(|e| m.delete(single(e)))
        .collect::<Result<Vec<_>>>()?
        .iter()
        .all(|d| !d.is_connected());
    if minimally {
        t.case(classes.iter().all(|s| s.len() >= 2), || {
            "trivial removable class in a minimally connected matroid".into()
        });
    }
    Ok(())
}

fn whitney_rota(m: &Matroid, t: &mut Tally) -> Result<()> {
    if m.has_loops() || m.len() > ORACLE_CAP {
        t.skipped += 1;
        return Ok(());
    }
    let a = characteristic_polynomial(m)?;
    let b = char_poly_subset_expansion(m)?;
    t.case(a == b, || format!("{a} vs {b}"));
    Ok(())
}

fn tutte_checks(m: &Matroid, t: &mut Tally) -> Result<()> {
    let tm = tutte(m);
    if m.len() <= ORACLE_CAP {
        let oracle = tutte_subset_expansion(m)?;
        t.case(tm == oracle, || {
            format!("memoized {tm} vs expansion {oracle}")
        });
    } else {
        t.skipped += 1;
    }
    t.case(tutte(&m.dual()) == tm.swap_variables(), || {
        "T(M*) != T(M; y, x)".into()
    });
    if m.has_loops() {
        t.case(tm.at_y_zero().is_zero(), || {
            "T(M;t,0) nonzero with a loop".into()
        });
        return Ok(());
    }
    let h = h_vector_via_f(m)?.polynomial();
    t.case(tm.at_y_zero() == h, || {
        format!("T(M;t,0) = {} vs {h}", tm.at_y_zero())
    });
    let sign = if m.rank().is_multiple_of(2) { 1 } else { -1 };
    let chi = tm
        .substitute(&IntPolynomial::new(vec![1, -1]), &IntPolynomial::zero())
        .scale(sign);
    let expected = characteristic_polynomial(m)?;
    t.case(chi == expected, || {
        format!("(-1)^r T(1-t,0) = {chi} vs {expected}")
    });
    Ok(())
}

fn order_invariance(m: &Matroid, t: &mut Tally) -> Result<()> {
    if m.has_loops() || m.len() > ORDER_INVARIANCE_CAP {
        t.skipped += 1;
        return Ok(());
    }
    let reference = bc_f_vector(m, &LinearOrder::natural(m.len()))?;
    for order in LinearOrder::all(m.len()) {
        let f = bc_f_vector(m, &order)?;
        t.case(f == reference, || {
            format!(
                "order {:?}: {:?} vs {:?}",
                order.sequence(),
                f.counts,
                reference.counts
            )
        });
    }
    Ok(())
}

fn product(m: &Matroid, t: &mut Tally) -> Result<()> {
    if m.has_loops() {
        t.skipped += 1;
        return Ok(());
    }
    let phi = h_polynomial(m)?;
    if !is_strongly_flawless(&phi.coefficients_descending())? {
        t.skipped += 1;
        return Ok(());
    }
    let mut factors = vec![phi.clone()];
    factors
        .extend((1..=4).map(|k| IntPolynomial::new((0..=k).map(|d| i64::from(d > 0)).collect())));
    for psi in &factors {
        t.case(product_strongly_flawless_check(&phi, psi)?, || {
            format!("({phi}) * ({psi}) not strongly flawless")
        });
    }
    Ok(())
}
