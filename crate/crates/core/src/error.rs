use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("malformed monomial `{0}`")]
    MalformedMonomial(String),
    #[error("exponent overflow (capacity {})", crate::monomial::MAX_EXPONENT)]
    ExponentOverflow,
    #[error("invalid variable list: {0}")]
    InvalidContext(String),
    #[error("monomials over different variable counts ({left} vs {right})")]
    ContextMismatch { left: usize, right: usize },
    #[error("an ideal needs at least one generator")]
    EmptyGenerators,
    #[error("generators are not minimal: {0}")]
    NotMinimalGenerators(String),
    #[error("{what}: {actual} exceeds the guard {limit}")]
    GuardExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("vertex index {index} out of range 1..={bound}")]
    FaceOutOfRange { index: usize, bound: usize },
    #[error("the complex has no non-faces, so the Stanley-Reisner ideal is zero")]
    NoNonFaces,
    #[error("invalid rooting map: {0}")]
    InvalidRooting(String),
    #[error("invalid total order: {0}")]
    InvalidOrder(String),
    #[error("labeled complex is inconsistent with the ideal: {0}")]
    LabelMismatch(String),
    #[error("the resolution is not minimal (unit coefficient from {face} to {facet})")]
    NotMinimalResolution { face: String, facet: String },
    #[error("negative exponent in a public result: {0}")]
    NegativeExponent(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("integer coefficient overflow")]
    CoefficientOverflow,
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::GuardExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
