use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("circuit axioms violated: {0}")]
    AxiomViolation(String),
    #[error("the empty set cannot be a circuit")]
    EmptyCircuit,
    #[error("element `{0}` is not in the ground set")]
    ElementNotInGroundSet(String),
    #[error("label `{0}` appears more than once")]
    DuplicateLabel(String),
    #[error("matroid has loops")]
    HasLoops,
    #[error("matroid is not connected")]
    NotConnected,
    #[error("bad basepoint: {0}")]
    BadBasepoint(String),
    #[error("ground sets overlap")]
    OverlappingGroundSets,
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("ground set has {size} elements, the cap is {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("length mismatch: got {got}, expected at most {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("empty sequence")]
    EmptySequence,
    #[error("polynomial has negative coefficients")]
    NegativeCoefficients,
    #[error("sequence must start with 1")]
    NotStartingAtOne,
    #[error("not a linear order on the ground set: {0}")]
    BadOrder(String),
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}
