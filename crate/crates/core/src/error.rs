use thiserror::Error;

/// Coarse classification used to pick process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Validation,
    Resource,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("multiplication table is not square (row {row} has {len} entries, expected {order})")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("table entry {value} at ({row}, {col}) is out of range for order {order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("empty multiplication table")]
    EmptyTable,
    #[error("table has no two-sided identity element")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    MissingInverse(usize),
    #[error("table is not a Latin square ({0})")]
    NotLatinSquare(String),
    #[error("multiplication is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NonAssociative { a: usize, b: usize, c: usize },
    #[error("{what} {value} exceeds the configured cap {cap}")]
    CapExceeded { what: &'static str, value: u128, cap: u128 },
    #[error("element index {index} out of range for a group of order {order}")]
    ElementOutOfRange { index: usize, order: usize },
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    #[error("invalid group action: {0}")]
    InvalidAction(String),
    #[error("invalid G-CW complex: {0}")]
    InvalidComplex(String),
    #[error("invalid permutation generators: {0}")]
    InvalidPermutation(String),
    #[error("malformed certificate: {0}")]
    BadCertificate(String),
    #[error("Burnside elements live over different groups")]
    GroupMismatch,
    #[error("class {0} is not an element of the poset")]
    MissingPosetElement(String),
    #[error("invalid singular point data: {0}")]
    InvalidSingularPoint(String),
    #[error("boundary behaviour `none` requires an orbifold without boundary strata ({0} boundary strata present)")]
    BoundaryMisuse(usize),
    #[error("unsupported specialization: {0}")]
    UnsupportedSpecialization(String),
    #[error("unknown group reference `{0}`")]
    UnknownGroup(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cannot read {0}")]
    Io(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::CapExceeded { .. } => ErrorKind::Resource,
            Error::Parse(_) | Error::Io(_) => ErrorKind::Parse,
            _ => ErrorKind::Validation,
        }
    }

    pub(crate) fn cap(what: &'static str, value: impl Into<u128>, cap: impl Into<u128>) -> Self {
        Error::CapExceeded { what, value: value.into(), cap: cap.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
