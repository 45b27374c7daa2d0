use alloc::string::String;

/// Semantic errors raised by the algebra, the evaluators and the checkers.
///
/// Parse failures have their own type, [`crate::syntax::ParseError`].
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("unknown algebra atom {0:?}")]
    UnknownAlgebraAtom(String),
    #[error("operands belong to different algebras")]
    AlgebraMismatch,
    #[error("{0:?} is not a valid identifier")]
    InvalidName(String),
    #[error("duplicate act definition {0:?}")]
    DuplicateAct(String),
    #[error("reference to undefined act {0:?}")]
    UnknownActRef(String),
    #[error("act {0:?} is cyclic and has no finite unfolding")]
    CyclicAct(String),
    #[error("act {0:?} is not part of a cycle")]
    NotCyclic(String),
    #[error("no truth value for atom {0:?}")]
    MissingAtom(String),
    #[error("missing assignment for {0}")]
    MissingAssignment(String),
    #[error("assignment for {0} is standard; act values must be nonstandard")]
    StandardAssignment(String),
    #[error("operation requires a nonstandard value")]
    StandardInput,
    #[error("search needs {needed} evaluations, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("unsupported evaluation space: {0}")]
    UnsupportedSpace(String),
}
