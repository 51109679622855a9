use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("n0 must be nonzero")]
    ZeroN0,
    #[error("truncation order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("series constant term is not the unit")]
    NonUnitConstant,
    #[error("unsupported map `{0}`")]
    UnsupportedMap(String),
    #[error("invalid slot pattern `{0}`")]
    InvalidSlotPattern(String),
    #[error("suite `{suite}` requires twist kind {expected}")]
    TwistKindMismatch { suite: String, expected: String },
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("malformed value: {0}")]
    Malformed(String),
}
