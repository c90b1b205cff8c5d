use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid element label {0:?}")]
    InvalidLabel(String),
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("ground set has {0} elements, at most {max} supported", max = crate::MAX_GROUND)]
    GroundSetTooLarge(usize),
    #[error("support universe has {0} indices, at most {max} supported", max = crate::MAX_UNIVERSE)]
    UniverseTooLarge(usize),
    #[error("unknown element {0}")]
    UnknownElement(String),
    #[error("element {0} listed twice")]
    DuplicateElement(String),
    #[error("no rank given for subset {0}")]
    MissingSubset(String),
    #[error("rank of subset {0} given more than once")]
    DuplicateSubset(String),
    #[error("negative rank {value} for subset {subset}")]
    NegativeRank { subset: String, value: i64 },
    #[error("empty set must have rank 0, got {0}")]
    NonzeroEmptySet(i64),
    #[error("rank function violates the polymatroid axioms")]
    NotAPolymatroid,
    #[error("polymatroid is not Boolean")]
    NotBoolean,
    #[error("invalid Matus coefficients: {0}")]
    InvalidCoefficients(String),
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
    #[error("certificate does not realize the family")]
    CertificateInvalid,
    #[error("family has a loop element {0}")]
    HasLoops(String),
    #[error("universe index {0} is not used by any support")]
    UnusedIndex(u32),
    #[error("order is not a permutation of the ground set")]
    NotAPermutation,
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("expected {expected} elements, got {got}")]
    WrongArity { expected: usize, got: usize },
    #[error("element {0} has an empty support")]
    EmptySupport(String),
    #[error("a Boolean cycle needs at least 3 elements, got {0}")]
    TooFewElements(usize),
    #[error("invalid region sizes: {0}")]
    InvalidSizes(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
