use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("missing composite for ({0}, {1})")]
    MissingComposite(String, String),
    #[error("associativity fails on ({0}, {1}, {2})")]
    AssociativityViolation(String, String, String),
    #[error("unit law fails at {0}")]
    UnitViolation(String),
    #[error("duplicate identifier {0}")]
    DuplicateId(String),
    #[error("unknown reference {0}")]
    UnknownReference(String),
    #[error("unknown object {0}")]
    UnknownObject(String),
    #[error("unknown element {0}")]
    UnknownElement(String),
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    #[error("functoriality fails: {0}")]
    FunctorialityViolation(String),
    #[error("fiber mismatch: {0}")]
    FiberMismatch(String),
    #[error("variance mismatch: {0}")]
    VarianceMismatch(String),
    #[error("search exceeded the size cap of {0} states")]
    SizeLimit(usize),
    #[error("not idempotent: {0}")]
    NotIdempotent(String),
    #[error("split mismatch: {0}")]
    SplitMismatch(String),
    #[error("retraction failure: {0}")]
    RetractionFailure(String),
    #[error("action is not free: {0}")]
    NotFree(String),
    #[error("no loose colimit")]
    NoLooseColimit,
    #[error("no loose limit")]
    NoLooseLimit,
    #[error("idempotent does not split")]
    NotSplittable,
    #[error("not a group: {0}")]
    NotAGroup(String),
}

impl Error {
    /// Stable short name, used in reports and CLI output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::MissingComposite(..) => "MissingComposite",
            Error::AssociativityViolation(..) => "AssociativityViolation",
            Error::UnitViolation(..) => "UnitViolation",
            Error::DuplicateId(..) => "DuplicateId",
            Error::UnknownReference(..) => "UnknownReference",
            Error::UnknownObject(..) => "UnknownObject",
            Error::UnknownElement(..) => "UnknownElement",
            Error::TypeMismatch(..) => "TypeMismatch",
            Error::FunctorialityViolation(..) => "FunctorialityViolation",
            Error::FiberMismatch(..) => "FiberMismatch",
            Error::VarianceMismatch(..) => "VarianceMismatch",
            Error::SizeLimit(..) => "SizeLimit",
            Error::NotIdempotent(..) => "NotIdempotent",
            Error::SplitMismatch(..) => "SplitMismatch",
            Error::RetractionFailure(..) => "RetractionFailure",
            Error::NotFree(..) => "NotFree",
            Error::NoLooseColimit => "NoLooseColimit",
            Error::NoLooseLimit => "NoLooseLimit",
            Error::NotSplittable => "NotSplittable",
            Error::NotAGroup(..) => "NotAGroup",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
