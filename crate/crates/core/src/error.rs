use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("extension degree {0} out of range (expected 1..=24)")]
    DegreeOutOfRange(u32),
    #[error("modulus 0x{modulus:x} has degree {found}, expected {expected}")]
    DegreeMismatch {
        modulus: u64,
        expected: u32,
        found: u32,
    },
    #[error("reducible modulus 0x{0:x}")]
    ReducibleModulus(u64),
    #[error("element 0x{bits:x} does not fit in GF(2^{n})")]
    ElementOutOfRange { bits: u64, n: u32 },
    #[error("field mismatch: operands belong to different fields")]
    FieldMismatch,
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("theta must be nonzero")]
    ZeroTheta,
    #[error("all coordinates are zero")]
    ZeroPoint,
    #[error("all line coefficients are zero")]
    ZeroLine,
    #[error("zero conic")]
    ZeroConic,
    #[error("singular transform")]
    SingularTransform,
    #[error("pencil parameter (0:0) is not a point of the projective line")]
    ZeroParameter,
    #[error("base conics are proportional and do not span a pencil")]
    ProportionalConics,
    #[error("alpha and beta must be nonzero")]
    ZeroPencilParameter,
    #[error("alpha must differ from beta (alpha ≠ beta)")]
    EqualPencilParameters,
    #[error("invalid hex value {0:?}")]
    InvalidHex(String),
    #[error("expected {expected} comma-separated values, found {found}")]
    WrongArity { expected: usize, found: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
