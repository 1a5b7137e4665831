use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::matroid::{check_cap, Matroid};
use crate::set::{self, Set, DEFAULT_CAP};

/// Dense matrix of exact rationals, row-major. `BigRational` keeps every
/// entry reduced with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigRational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::BadParameters(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(RationalMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_integer_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::BadParameters("ragged matrix rows".into()));
        }
        let entries = rows
            .iter()
            .flatten()
            .map(|&x| BigRational::from_integer(BigInt::from(x)))
            .collect();
        Self::new(rows.len(), cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    #[allow(clippy::needless_range_loop)]
    fn column_rank(&self, columns: Set) -> usize {
        let picked: Vec<usize> = set::elements(columns).collect();
        let mut a: Vec<Vec<BigRational>> = (0..self.rows)
            .map(|i| picked.iter().map(|&j| self.entry(i, j).clone()).collect())
            .collect();
        let mut rank = 0;
        for c in 0..picked.len() {
            let Some(p) = (rank..self.rows).find(|&r| !a[r][c].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            let pivot = a[rank][c].clone();
            for r in rank + 1..self.rows {
                if a[r][c].is_zero() {
                    continue;
                }
                let factor = &a[r][c] / &pivot;
                for k in c..picked.len() {
                    let delta = &factor * &a[rank][k];
                    a[r][k] -= delta;
                }
            }
            rank += 1;
        }
        rank
    }
}

/// Matrix over the prime field `F_p`, row-major, entries in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFieldMatrix {
    rows: usize,
    cols: usize,
    p: u64,
    entries: Vec<u64>,
}

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

impl PrimeFieldMatrix {
    /// Entries are reduced mod `p`.
    pub fn new(rows: usize, cols: usize, p: u64, entries: &[i64]) -> Result<Self> {
        if !is_prime(p) || p >= 1 << 32 {
            return Err(Error::BadParameters(format!(
                "{p} is not a prime below 2^32"
            )));
        }
        if entries.len() != rows * cols {
            return Err(Error::BadParameters(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        let entries = entries
            .iter()
            .map(|&x| x.rem_euclid(p as i64) as u64)
            .collect();
        Ok(PrimeFieldMatrix {
            rows,
            cols,
            p,
            entries,
        })
    }

    pub fn from_integer_rows(p: u64, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::BadParameters("ragged matrix rows".into()));
        }
        let flat: Vec<i64> = rows.iter().flatten().copied().collect();
        Self::new(rows.len(), cols, p, &flat)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn entry(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.cols + j]
    }

    fn inverse(&self, a: u64) -> u64 {
        // Fermat: a^(p-2)
        let p = self.p;
        let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    }

    #[allow(clippy::needless_range_loop)]
    fn column_rank(&self, columns: Set) -> usize {
        let p = self.p;
        let picked: Vec<usize> = set::elements(columns).collect();
        let mut a: Vec<Vec<u64>> = (0..self.rows)
            .map(|i| picked.iter().map(|&j| self.entry(i, j)).collect())
            .collect();
        let mut rank = 0;
        for c in 0..picked.len() {
            let Some(pr) = (rank..self.rows).find(|&r| a[r][c] != 0) else {
                continue;
            };
            a.swap(rank, pr);
            let inv = self.inverse(a[rank][c]);
            for r in rank + 1..self.rows {
                if a[r][c] == 0 {
                    continue;
                }
                let factor = a[r][c] * inv % p;
                for k in c..picked.len() {
                    let sub = factor * a[rank][k] % p;
                    a[r][k] = (a[r][k] + p - sub) % p;
                }
            }
            rank += 1;
        }
        rank
    }
}

/// Vector matroid of the columns, labeled `1..=cols`. Circuits are the
/// minimal dependent column sets, searched by increasing size.
pub fn linear_rational(a: &RationalMatrix) -> Result<Matroid> {
    check_cap(a.cols, DEFAULT_CAP)?;
    let circuits = set::minimal_dependent_sets(a.cols, a.rows.min(a.cols) + 1, |x| {
        a.column_rank(x) < set::len(x)
    });
    Ok(Matroid::from_masks_unchecked(
        GroundSet::numbered(a.cols),
        circuits,
    ))
}

pub fn linear_prime(a: &PrimeFieldMatrix) -> Result<Matroid> {
    check_cap(a.cols, DEFAULT_CAP)?;
    let circuits = set::minimal_dependent_sets(a.cols, a.rows.min(a.cols) + 1, |x| {
        a.column_rank(x) < set::len(x)
    });
    Ok(Matroid::from_masks_unchecked(
        GroundSet::numbered(a.cols),
        circuits,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_bipartite, graphic, uniform};

    #[test]
    fn identity_is_free() {
        let id = RationalMatrix::from_integer_rows(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]])
            .unwrap();
        assert_eq!(
            linear_rational(&id).unwrap(),
            Matroid::free(GroundSet::numbered(3))
        );
    }

    #[test]
    fn three_vectors_in_the_plane() {
        let a = RationalMatrix::from_integer_rows(&[vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        assert_eq!(linear_rational(&a).unwrap(), uniform(2, 3).unwrap());
        let b = PrimeFieldMatrix::from_integer_rows(2, &[vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        assert_eq!(linear_prime(&b).unwrap(), uniform(2, 3).unwrap());
    }

    #[test]
    fn characteristic_matters() {
        // Fano-like dependency: (1,1,0),(1,0,1),(0,1,1) are dependent only mod 2.
        let rows = [vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]];
        let q = linear_rational(&RationalMatrix::from_integer_rows(&rows).unwrap()).unwrap();
        let f2 = linear_prime(&PrimeFieldMatrix::from_integer_rows(2, &rows).unwrap()).unwrap();
        assert_eq!(q.rank(), 3);
        assert_eq!(f2.rank(), 2);
    }

    #[test]
    fn incidence_matrix_of_k23() {
        // signed incidence, last vertex row dropped
        let g = complete_bipartite(2, 3).unwrap();
        let n = g.vertex_count();
        let mut rows = vec![vec![0i64; g.edges().len()]; n - 1];
        for (k, e) in g.edges().iter().enumerate() {
            if e.u < n - 1 {
                rows[e.u][k] = 1;
            }
            if e.v < n - 1 {
                rows[e.v][k] = -1;
            }
        }
        let m = linear_rational(&RationalMatrix::from_integer_rows(&rows).unwrap()).unwrap();
        assert_eq!(m, graphic(&g).unwrap());
    }

    #[test]
    fn rejects_bad_modulus() {
        assert!(PrimeFieldMatrix::new(1, 1, 4, &[1]).is_err());
        assert!(PrimeFieldMatrix::new(1, 2, 5, &[1]).is_err());
        let m = PrimeFieldMatrix::new(1, 2, 5, &[-1, 7]).unwrap();
        assert_eq!((m.entry(0, 0), m.entry(0, 1)), (4, 2));
    }

    #[test]
    fn rational_entries_normalized() {
        let x = BigRational::new(BigInt::from(2), BigInt::from(-4));
        let a = RationalMatrix::new(1, 1, vec![x]).unwrap();
        assert_eq!(
            a.entry(0, 0),
            &BigRational::new(BigInt::from(-1), BigInt::from(2))
        );
        assert_eq!(a.entry(0, 0).denom(), &BigInt::from(2));
    }
}
