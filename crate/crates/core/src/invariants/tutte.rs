use std::collections::HashMap;

use crate::error::Result;
use crate::matroid::{check_cap, Matroid};
use crate::poly::{binomial, BivariatePolynomial};
use crate::set::{self, Set};

use super::ORACLE_CAP;

type Key = (usize, Vec<Set>);

/// Memo table for the deletion-contraction recursion, keyed on
/// `(ground size, canonical circuit family)` after index compaction.
///
/// No isomorphism reduction happens: two labelings of the same matroid get
/// separate entries.
#[derive(Debug, Default)]
pub struct TutteCache {
    memo: HashMap<Key, BivariatePolynomial>,
    hits: u64,
}

impl TutteCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    pub fn hits(&self) -> u64 {
        self.hits
    }

    pub fn tutte(&mut self, m: &Matroid) -> BivariatePolynomial {
        self.eval(m.len(), m.circuit_masks().to_vec())
    }

    fn eval(&mut self, n: usize, circuits: Vec<Set>) -> BivariatePolynomial {
        // Strip loops (factor y) and coloops (factor x) first; what remains
        // has neither, so index 0 is always a valid pivot.
        let loops = circuits
            .iter()
            .filter(|c| c.count_ones() == 1)
            .fold(0, |acc, &c| acc | c);
        let covered = circuits.iter().fold(0, |acc, &c| acc | c);
        let coloops = set::full(n) & !covered;
        let keep = set::full(n) & !loops & !coloops;
        let x_deg = coloops.count_ones();
        let y_deg = loops.count_ones();
        let rest = keep.count_ones() as usize;
        if rest == 0 {
            return BivariatePolynomial::monomial(1, x_deg, y_deg);
        }
        let mut reduced: Vec<Set> = circuits
            .into_iter()
            .filter(|&c| c & loops == 0)
            .map(|c| set::compress(c, keep))
            .collect();
        set::sort_family(&mut reduced);
        let key = (rest, reduced);
        if let Some(p) = self.memo.get(&key) {
            self.hits += 1;
            return p.shift(x_deg, y_deg);
        }
        let (_, family) = &key;
        let pivot = set::bit(0);
        let deleted: Vec<Set> = family
            .iter()
            .filter(|&&c| c & pivot == 0)
            .map(|&c| set::remove_index(c, 0))
            .collect();
        let contracted = set::minimalize(family.iter().map(|&c| set::remove_index(c, 0)).collect());
        let del = self.eval(rest - 1, deleted);
        let con = self.eval(rest - 1, contracted);
        let p = &del + &con;
        let out = p.shift(x_deg, y_deg);
        self.memo.insert(key, p);
        out
    }
}

/// Tutte polynomial by memoized deletion-contraction.
pub fn tutte(m: &Matroid) -> BivariatePolynomial {
    TutteCache::new().tutte(m)
}

/// `sum over X of (x-1)^(r(E)-r(X)) (y-1)^(|X|-r(X))`, term by term.
pub fn tutte_subset_expansion(m: &Matroid) -> Result<BivariatePolynomial> {
    check_cap(m.len(), ORACLE_CAP)?;
    let n = m.len();
    let r = m.rank();
    // counts[a][b] = number of X with corank a and nullity b
    let mut counts = vec![vec![0i64; n + 1]; r + 1];
    for x in 0..=m.ground().full() {
        let rx = m.rank_of_mask(x);
        counts[r - rx][set::len(x) - rx] += 1;
    }
    let mut out = BivariatePolynomial::zero();
    for (a, row) in counts.iter().enumerate() {
        for (b, &cnt) in row.iter().enumerate() {
            if cnt == 0 {
                continue;
            }
            let (a, b) = (a as i64, b as i64);
            for i in 0..=a {
                let xi = binomial(a, i) * if (a - i) % 2 == 0 { 1 } else { -1 };
                for j in 0..=b {
                    let yj = binomial(b, j) * if (b - j) % 2 == 0 { 1 } else { -1 };
                    out.add_term(i as u32, j as u32, cnt * xi * yj);
                }
            }
        }
    }
    Ok(out)
}
