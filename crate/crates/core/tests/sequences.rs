use flawless_core::flawless::{
    is_flawless, is_log_concave, is_o_sequence, is_strongly_flawless, is_symmetric, is_unimodal,
    product_grid, product_strongly_flawless_check, strongly_flawless_violation, Predicate,
};
use flawless_core::IntPolynomial;
use itertools::Itertools;
use proptest::prelude::*;

/// Every sequence of length `1..=max_len` over `0..=max_entry`.
fn all_sequences(max_len: usize, max_entry: i64) -> Vec<Vec<i64>> {
    (1..=max_len)
        .flat_map(|len| (0..len).map(|_| 0..=max_entry).multi_cartesian_product())
        .collect()
}

fn definitional_strongly_flawless(a: &[i64]) -> bool {
    let s = a.len() - 1;
    (0..a.len()).all(|i| (i..a.len()).all(|j| j > s.saturating_sub(i) || i > s - i || a[i] <= a[j]))
}

#[test]
fn unimodal_flawless_iff_strongly_flawless() {
    for a in all_sequences(6, 4) {
        let sf = is_strongly_flawless(&a).unwrap();
        assert_eq!(sf, definitional_strongly_flawless(&a), "{a:?}");
        if is_unimodal(&a).unwrap() {
            assert_eq!(is_flawless(&a).unwrap(), sf, "{a:?}");
        }
        if sf {
            assert!(is_flawless(&a).unwrap(), "{a:?}");
        }
    }
}

#[test]
fn positive_log_concave_is_unimodal() {
    for a in all_sequences(6, 4) {
        if a.iter().all(|&x| x > 0) && is_log_concave(&a).unwrap() {
            assert!(is_unimodal(&a).unwrap(), "{a:?}");
        }
    }
}

#[test]
fn symmetric_unimodal_products() {
    let sym: Vec<Vec<i64>> = all_sequences(4, 3)
        .into_iter()
        .filter(|a| a[0] > 0 && is_symmetric(a).unwrap() && is_unimodal(a).unwrap())
        .collect();
    let poly = |a: &[i64]| IntPolynomial::new(a.to_vec());
    for a in &sym {
        for b in &sym {
            let p = (&poly(a) * &poly(b)).coefficients_descending();
            assert!(
                is_symmetric(&p).unwrap() && is_unimodal(&p).unwrap(),
                "{a:?} {b:?}"
            );
        }
    }
}

#[test]
fn product_grid_is_clean() {
    let (pairs, bad) = product_grid(4, 3).unwrap();
    assert!(bad.is_none(), "{bad:?}");
    assert!(pairs > 1000);
}

#[test]
fn three_circuit_squared() {
    let c3 = IntPolynomial::new(vec![0, 1, 1]);
    let p = &c3 * &c3;
    assert_eq!(p.coefficients_descending(), [1, 2, 1]);
    assert!(product_strongly_flawless_check(&c3, &c3).unwrap());
}

#[test]
fn o_sequence_examples() {
    assert!(is_o_sequence(&[1, 3, 6, 10]).unwrap());
    assert!(!is_o_sequence(&[1, 2, 5]).unwrap());
    assert!(is_o_sequence(&[1, 2, 3, 4]).unwrap());
    assert!(!is_o_sequence(&[1, 1, 2]).unwrap());
}

proptest! {
    #[test]
    fn strongly_flawless_matches_definition(a in prop::collection::vec(0i64..6, 1..9)) {
        prop_assert_eq!(is_strongly_flawless(&a).unwrap(), definitional_strongly_flawless(&a));
        let v = strongly_flawless_violation(&a).unwrap();
        prop_assert_eq!(v.is_none(), is_strongly_flawless(&a).unwrap());
    }

    #[test]
    fn o_sequences_are_closed_under_prefixes(tail in prop::collection::vec(0i64..12, 0..6)) {
        let mut a = vec![1];
        a.extend(tail);
        if is_o_sequence(&a).unwrap() {
            for k in 1..=a.len() {
                prop_assert!(is_o_sequence(&a[..k]).unwrap(), "{:?}", &a[..k]);
            }
        }
    }

    #[test]
    fn violation_index_present_iff_false(a in prop::collection::vec(0i64..5, 1..8)) {
        for p in Predicate::ALL {
            if p == Predicate::OSequence || p == Predicate::StronglyLogConcave {
                continue;
            }
            let o = p.evaluate(&a).unwrap();
            prop_assert_eq!(o.holds, o.first_violation.is_none());
        }
    }
}
