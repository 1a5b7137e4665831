//! Matroids given by their circuits, the broken circuit complex and its
//! h-vector, and checks of flawlessness and related identities.

pub mod constructions;
pub mod error;
pub mod flawless;
pub mod ground;
pub mod invariants;
pub mod matroid;
pub mod order;
pub mod poly;
pub mod set;

pub use error::{Error, Result};
pub use ground::{GroundSet, Label};
pub use invariants::{FVector, HVector};
pub use matroid::{Matroid, SeriesClass, SeriesClassPartition};
pub use order::LinearOrder;
pub use poly::{BivariatePolynomial, IntPolynomial};
