//! Inputs shared by the benchmarks.

use flawless_core::constructions::{complete, complete_bipartite, graphic, uniform, wheel};
use flawless_core::Matroid;

/// Named matroids of increasing size.
pub fn bench_matroids() -> Vec<(&'static str, Matroid)> {
    vec![
        ("K23", graphic(&complete_bipartite(2, 3).unwrap()).unwrap()),
        ("K4", graphic(&complete(4).unwrap()).unwrap()),
        ("W5", graphic(&wheel(5).unwrap()).unwrap()),
        ("U(4,10)", uniform(4, 10).unwrap()),
        ("K5", graphic(&complete(5).unwrap()).unwrap()),
    ]
}
