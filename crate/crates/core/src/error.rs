use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("extension degree {0} out of range (expected 1..=4)")]
    FieldDegree(u32),
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("field mismatch: GF({0}) vs GF({1})")]
    FieldMismatch(u32, u32),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("polynomial is not homogeneous")]
    NonHomogeneous,
    #[error("non-square input, offending term {0}")]
    NonSquareInput(String),
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("orbit sums are only defined on monomials free of z")]
    ZInOrbitSum,
    #[error("{what}: index {index} out of range")]
    IndexOutOfRange { what: &'static str, index: i64 },
    #[error("not in the subalgebra (residual has {residual_terms} terms, leading {leading})")]
    NotInSubalgebra {
        residual_terms: usize,
        leading: String,
    },
    #[error("xi-monomial basis is linearly dependent; solution is not unique")]
    AmbiguousSolution,
    #[error("{what}: {terms} terms exceeds the term budget of {budget}")]
    BudgetExceeded {
        what: String,
        terms: usize,
        budget: usize,
    },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("consistency failure: {0}")]
    Consistency(String),
    #[error("group closure exceeded the cap of {0} elements")]
    CapExceeded(usize),
    #[error("transvection vector must be nonzero")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
