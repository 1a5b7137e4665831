//! Complementary h-vectors, sequence predicates, identity checkers and
//! sweeps.

mod checks;
mod complementary;
mod identities;
mod sequence;
mod sweep;

pub use checks::{CheckOutcome, Lemma, ORDER_INVARIANCE_CAP, SELF_GLUE_CAP};
pub use complementary::{complementary_h, g_vector, ComplementaryHVector, GVector};
pub use identities::{
    check_series1, check_series1_unclipped, check_series2, product_grid,
    product_strongly_flawless_check, FailingPair, FailureKind, IdentityReport, IndexCheck,
};
pub use sequence::{
    flawless_violation, log_concave_violation, o_sequence_violation, strongly_flawless_violation,
    strongly_log_concave_violation, symmetric_violation, unimodal_violation,
};
pub use sequence::{
    is_flawless, is_log_concave, is_o_sequence, is_strongly_flawless, is_strongly_log_concave,
    is_symmetric, is_unimodal, macaulay_pseudo_power, macaulay_representation, Predicate,
    PredicateOutcome, PredicateReport,
};
pub use sweep::{evaluate, sweep, SweepConfig, SweepItem, SweepReport, SweepSummary};
