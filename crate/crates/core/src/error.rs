use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group order exceeds the cap of {cap} elements")]
    OrderCapExceeded { cap: usize },

    #[error("search budget of {cap} group products exceeded")]
    BudgetExceeded { cap: u64 },

    #[error("generator images do not extend to a homomorphism")]
    NotAHomomorphism,

    #[error("expected {expected} generator images, got {got}")]
    ImageCount { expected: usize, got: usize },

    #[error("element is not a member of the group")]
    NotAMember,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("subgroup is not invariant under the endomorphism")]
    NotInvariant,

    #[error("morphisms are not composable")]
    NotComposable,

    #[error("morphism is not an endomorphism")]
    NotAnEndomorphism,

    #[error("Reidemeister number disagreement: fixed classes {fixed_classes}, orbits {orbits}")]
    MethodDisagreement { fixed_classes: usize, orbits: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("{name}: expected {field} {expected}, found {found}")]
    ExpectationMismatch {
        name: String,
        field: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("parse error in {source_name} at line {line}, column {column}: {message}")]
    Parse {
        source_name: String,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{source_name}: {message}")]
    Validation {
        source_name: String,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
