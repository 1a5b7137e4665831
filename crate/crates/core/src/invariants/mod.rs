//! Broken circuit complexes and the polynomial invariants read off them.
//!
//! Every invariant has two independent routes: the broken-circuit face count
//! and the deletion-contraction Tutte recursion on one side, literal subset
//! expansions on the other.

mod broken;
mod hvector;
mod polys;
mod tutte;

pub use broken::{bc_f_vector, broken_circuits, FVector};
pub use hvector::{
    f_to_h, h_polynomial, h_polynomial_any, h_to_f, h_vector, h_vector_via_f, h_vector_via_tutte,
    HVector,
};
pub use polys::{char_poly_subset_expansion, characteristic_polynomial, ORACLE_CAP};
pub use tutte::{tutte, tutte_subset_expansion, TutteCache};
