use crate::error::Result;
use crate::matroid::{check_cap, Matroid};
use crate::order::LinearOrder;
use crate::poly::IntPolynomial;
use crate::set;

/// Size cap for the literal subset-sum oracles.
pub const ORACLE_CAP: usize = 20;

/// `sum_i (-1)^i f_i t^(r-i)` from the broken circuit complex.
pub fn characteristic_polynomial(m: &Matroid) -> Result<IntPolynomial> {
    let f = super::bc_f_vector(m, &LinearOrder::natural(m.len()))?;
    let r = f.rank;
    let mut coeffs = vec![0i64; r + 1];
    for (i, &fi) in f.counts.iter().enumerate() {
        coeffs[r - i] = if i % 2 == 0 { fi } else { -fi };
    }
    Ok(IntPolynomial::new(coeffs))
}

/// `sum over X of (-1)^|X| t^(r(M) - r(X))`, term by term.
pub fn char_poly_subset_expansion(m: &Matroid) -> Result<IntPolynomial> {
    check_cap(m.len(), ORACLE_CAP)?;
    let r = m.rank();
    let mut coeffs = vec![0i64; r + 1];
    for x in 0..=m.ground().full() {
        let sign = if set::len(x).is_multiple_of(2) { 1 } else { -1 };
        coeffs[r - m.rank_of_mask(x)] += sign;
    }
    Ok(IntPolynomial::new(coeffs))
}
