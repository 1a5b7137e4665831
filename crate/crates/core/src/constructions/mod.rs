//! Builders for concrete matroids: uniform, graphic, and linear.

mod family;
mod graph;
mod linear;

pub use family::{family_graphs, Family};
pub use graph::{complete, complete_bipartite, cycle, graphic, wheel, Edge, Graph};
pub use linear::{linear_prime, linear_rational, PrimeFieldMatrix, RationalMatrix};

use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::matroid::{check_cap, Matroid};
use crate::set::{self, DEFAULT_CAP};

/// `U_{r,n}` on `{1..n}`: every `(r+1)`-subset is a circuit.
pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
    if r > n {
        return Err(Error::BadParameters(format!(
            "uniform({r}, {n}) needs r <= n"
        )));
    }
    check_cap(n, DEFAULT_CAP)?;
    let circuits = if r == n {
        Vec::new()
    } else {
        set::subsets_of_size(n, r + 1).collect()
    };
    Ok(Matroid::from_masks_unchecked(
        GroundSet::numbered(n),
        circuits,
    ))
}
