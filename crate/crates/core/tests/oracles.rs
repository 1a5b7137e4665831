//! Hand-checked values and brute-force oracles.

use flawless_core::constructions::{
    complete, complete_bipartite, cycle, graphic, linear_prime, linear_rational, uniform, wheel,
    Family, Graph, PrimeFieldMatrix, RationalMatrix,
};
use flawless_core::flawless::{
    check_series1, check_series2, complementary_h, g_vector, is_o_sequence, is_strongly_flawless,
};
use flawless_core::ground::labels;
use flawless_core::invariants::{
    bc_f_vector, char_poly_subset_expansion, characteristic_polynomial, h_to_f, h_vector, tutte,
    tutte_subset_expansion,
};
use flawless_core::{GroundSet, IntPolynomial, Label, LinearOrder, Matroid};

/// Edges of K_{2,3} labeled as in the usual drawing: top vertex 1, bottom
/// vertex 2, middle vertices 3, 4, 5.
fn k23() -> Matroid {
    let mut g = Graph::new(5);
    for (u, v, l) in [
        (1, 3, 1),
        (3, 2, 2),
        (1, 4, 3),
        (1, 5, 4),
        (5, 2, 5),
        (4, 2, 6),
    ] {
        g.add_edge(u - 1, v - 1, l).unwrap();
    }
    graphic(&g).unwrap()
}

fn trimmed(m: &Matroid) -> Vec<i64> {
    h_vector(m).unwrap().trimmed().to_vec()
}

#[test]
fn k23_worked_example() {
    let m = k23();
    assert_eq!(m.rank(), 4);
    assert_eq!(trimmed(&m), [1, 2, 3, 1]);
    assert_eq!(
        bc_f_vector(&m, &LinearOrder::natural(6)).unwrap().counts,
        [1, 6, 15, 17, 7]
    );
    assert_eq!(h_to_f(&[1, 2, 3, 1], 4).unwrap(), [1, 6, 15, 17, 7]);
    assert_eq!(trimmed(&m.contract(&labels([1])).unwrap()), [1, 2, 1]);
    assert_eq!(trimmed(&m.delete(&labels([1, 2])).unwrap()), [1, 1, 1]);
    let over_s = m.contract(&labels([1, 2])).unwrap();
    assert_eq!(over_s.rank(), 2);
    assert_eq!(trimmed(&over_s), [1]);
    assert_eq!(complementary_h(&m).unwrap().entries, [0, 1]);
    assert_eq!(g_vector(&m).unwrap().entries, [1, 1]);
    assert!(is_o_sequence(&[1, 1]).unwrap());
    // h(M;t) = t^4 + 2t^3 + 3t^2 + t
    assert_eq!(
        h_vector(&m).unwrap().polynomial(),
        IntPolynomial::new(vec![0, 1, 3, 2, 1])
    );
}

#[test]
fn k23_series_classes() {
    let m = k23();
    let classes: Vec<Vec<Label>> = m
        .series_classes()
        .unwrap()
        .classes()
        .map(|c| c.elements.clone())
        .collect();
    assert_eq!(classes, [labels([1, 2]), labels([3, 6]), labels([4, 5])]);
    let r1 = check_series1(&m, &labels([1, 2]), &Label::from(1)).unwrap();
    assert!(r1.holds);
    assert_eq!((r1.indices[1].lhs, r1.indices[1].rhs[0].1), (1, 1));
    let r2 = check_series2(&m, &labels([1, 2]), &Label::from(1)).unwrap();
    assert!(r2.holds);
}

#[test]
fn k23_graph_matches_bipartite_builder() {
    let a = trimmed(&k23());
    let b = trimmed(&graphic(&complete_bipartite(2, 3).unwrap()).unwrap());
    assert_eq!(a, b);
}

#[test]
fn circuits_have_all_ones() {
    for r in 1..=8 {
        let m = uniform(r, r + 1).unwrap();
        assert_eq!(trimmed(&m), vec![1; r], "r = {r}");
        let mut c = vec![0];
        c.extend(std::iter::repeat_n(1, r));
        assert_eq!(h_vector(&m).unwrap().polynomial(), IntPolynomial::new(c));
    }
}

#[test]
fn cycles_and_triangle() {
    assert_eq!(trimmed(&graphic(&cycle(3).unwrap()).unwrap()), [1, 1]);
    assert_eq!(trimmed(&graphic(&cycle(5).unwrap()).unwrap()), [1, 1, 1, 1]);
}

/// h-vectors of `U(r, n)`: `h_i = C(n - r + i - 1, i)` for `i < r`.
#[test]
fn uniform_h_vectors() {
    fn binom(n: i64, k: i64) -> i64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
    for n in 2..=8 {
        for r in 1..n {
            let expected: Vec<i64> = (0..r as i64)
                .map(|i| binom(n as i64 - r as i64 + i - 1, i))
                .collect();
            assert_eq!(trimmed(&uniform(r, n).unwrap()), expected, "U({r},{n})");
        }
    }
}

#[test]
fn chromatic_polynomial_of_k4() {
    // chi(K4) = t(t-1)(t-2)(t-3) = t * (t^3 - 6t^2 + 11t - 6)
    let m = graphic(&complete(4).unwrap()).unwrap();
    let chi = characteristic_polynomial(&m).unwrap();
    assert_eq!(chi, IntPolynomial::new(vec![-6, 11, -6, 1]));
    assert_eq!(chi, char_poly_subset_expansion(&m).unwrap());
}

#[test]
fn tutte_of_small_graphs() {
    // T(K4) = x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3
    let t = tutte(&graphic(&complete(4).unwrap()).unwrap());
    let terms: Vec<(u32, u32, i64)> = t.terms().collect();
    let mut expected = vec![
        (3, 0, 1),
        (2, 0, 3),
        (1, 0, 2),
        (1, 1, 4),
        (0, 1, 2),
        (0, 2, 3),
        (0, 3, 1),
    ];
    expected.sort();
    let mut got = terms.clone();
    got.sort();
    assert_eq!(got, expected);
    // W3 = K4 and wheels are self-dual
    let w4 = graphic(&wheel(4).unwrap()).unwrap();
    assert_eq!(tutte(&w4).swap_variables(), tutte(&w4.dual()));
    assert_eq!(tutte(&w4), tutte_subset_expansion(&w4).unwrap());
}

#[test]
fn graphic_and_linear_routes_agree() {
    // signed incidence matrix of K_{2,3} in the labeling above
    let edges = [(1, 3), (3, 2), (1, 4), (1, 5), (5, 2), (4, 2)];
    let rows: Vec<Vec<i64>> = (1..=5)
        .map(|v| {
            edges
                .iter()
                .map(|&(a, b)| {
                    if a == v {
                        1
                    } else if b == v {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    let q = linear_rational(&RationalMatrix::from_integer_rows(&rows).unwrap()).unwrap();
    assert_eq!(q, k23());
    let f3 = linear_prime(&PrimeFieldMatrix::from_integer_rows(3, &rows).unwrap()).unwrap();
    assert_eq!(f3, k23());
}

#[test]
fn fano_plane_is_not_rational() {
    let rows = vec![
        vec![1, 0, 0, 1, 1, 0, 1],
        vec![0, 1, 0, 1, 0, 1, 1],
        vec![0, 0, 1, 0, 1, 1, 1],
    ];
    let fano = linear_prime(&PrimeFieldMatrix::from_integer_rows(2, &rows).unwrap()).unwrap();
    let non_fano = linear_rational(&RationalMatrix::from_integer_rows(&rows).unwrap()).unwrap();
    fano.validate().unwrap();
    assert_ne!(fano, non_fano);
    assert_eq!(fano.circuits().iter().filter(|c| c.len() == 3).count(), 7);
    assert_eq!(
        non_fano.circuits().iter().filter(|c| c.len() == 3).count(),
        6
    );
    assert!(is_strongly_flawless(&trimmed(&fano)).unwrap());
}

#[test]
fn family_sizes() {
    let counts: Vec<usize> = (1..=7)
        .map(|k| Family::Graphic { max_edges: k }.members().unwrap().len())
        .collect();
    // connected loopless multigraphs with at most k edges
    assert_eq!(counts, [1, 3, 8, 20, 53, 156, 489]);
    assert_eq!(Family::Uniform { max_n: 8 }.members().unwrap().len(), 36);
}

#[test]
fn constructed_matroids_satisfy_the_axioms() {
    for (id, m) in (Family::Graphic { max_edges: 6 }).members().unwrap() {
        m.validate().unwrap_or_else(|e| panic!("{id}: {e}"));
    }
    for (id, m) in (Family::Uniform { max_n: 7 }).members().unwrap() {
        m.validate().unwrap_or_else(|e| panic!("{id}: {e}"));
    }
}

#[test]
fn rank_agrees_with_brute_force() {
    for (id, m) in (Family::Graphic { max_edges: 5 }).members().unwrap() {
        // largest independent subset, found by scanning all subsets
        for x in 0..=m.ground().full() {
            let best = (0..=x)
                .filter(|&y| y & !x == 0 && m.is_independent_mask(y))
                .map(|y| y.count_ones() as usize)
                .max()
                .unwrap();
            assert_eq!(m.rank_of_mask(x), best, "{id} {x:b}");
        }
    }
}

#[test]
fn empty_matroid() {
    let m = Matroid::free(GroundSet::numbered(0));
    assert_eq!(trimmed(&m), [1]);
    assert!(m.is_connected());
    assert_eq!(complementary_h(&m).unwrap().entries, [0]);
}
