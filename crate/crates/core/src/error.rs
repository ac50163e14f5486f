use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("membership {value} at ({parameter}, {object}) is outside [0, 1]")]
    MembershipOutOfRange {
        parameter: String,
        object: String,
        value: f64,
    },

    #[error("membership value {0} is outside [0, 1]")]
    ValueOutOfRange(f64),

    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("expected {expected} rows (one per parameter), found {found}")]
    RowCount { expected: usize, found: usize },

    #[error("duplicate {kind} label `{label}`")]
    DuplicateLabel { kind: &'static str, label: String },

    #[error("a fuzzy soft set needs at least one {0}")]
    Empty(&'static str),

    #[error("label mismatch: {0}")]
    LabelMismatch(String),

    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),

    #[error("unknown object `{0}`")]
    UnknownObject(String),

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("cell ({parameter}, {object}) is undefined (0/0)")]
    UndefinedCell { parameter: String, object: String },

    #[error("radius {0} must lie in the open interval (0, 1)")]
    RadiusOutOfRange(f64),

    #[error("the center is not a member of the collection")]
    CenterNotInCollection,

    #[error("sequence prefix is empty")]
    EmptyPrefix,

    #[error("invalid mapping: {0}")]
    InvalidMapping(String),

    #[error("malformed document: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
