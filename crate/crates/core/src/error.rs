use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("relator does not act trivially at sheet {sheet}")]
    RelatorNotTrivial { sheet: usize },
    #[error("permutation representation is not transitive")]
    NotTransitive,
    #[error("bad degree: {0}")]
    BadDegree(String),
    #[error("search budget of {budget} exceeded")]
    SearchBudgetExceeded { budget: usize },
    #[error("genus mismatch: expected {expected}, found {found}")]
    GenusMismatch { expected: usize, found: usize },
    #[error("invalid identification: {0}")]
    InvalidIdentification(String),
    #[error("cycles live on different complexes")]
    ComplexMismatch,
    #[error("elements are not over a common base tower")]
    IncompatibleTower,
    #[error("switch condition violated at switch {switch}")]
    SwitchViolation { switch: usize },
    #[error("negative weight on branch {branch}")]
    NegativeWeight { branch: usize },
    #[error("base surfaces do not match")]
    BaseMismatch,
    #[error("carrying matrix does not map the source cone into the target cone")]
    ConeViolation,
    #[error("weights are not integral")]
    NonIntegerWeights,
    #[error("limit elements have different kinds")]
    KindMismatch,
    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("not a cycle: boundary is nonzero at vertex {vertex}")]
    NotACycle { vertex: usize },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
