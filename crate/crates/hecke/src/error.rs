use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("the parameter xi must be nonzero")]
    ZeroParameter,
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("generator index {0} out of range")]
    GeneratorOutOfRange(usize),
    #[error("empty segment [{0},{1}]")]
    EmptySegment(i64, i64),
    #[error("composition mismatch: {0}")]
    CompositionMismatch(String),
    #[error("modules live over different fields or parameters")]
    FieldMismatch,
    #[error("relation {0} fails")]
    RelationFailed(String),
    #[error("matrix is singular")]
    Singular,
    #[error("module not absolutely irreducible over this field: {0}")]
    NotAbsolutelyIrreducible(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error(transparent)]
    Core(#[from] mseg_core::Error),
}

pub type Result<T> = std::result::Result<T, HeckeError>;
