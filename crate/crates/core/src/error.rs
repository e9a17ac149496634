use thiserror::Error;

/// Errors raised by code construction and analysis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("extension degree {0} outside the supported range 2..=32")]
    DegreeOutOfRange(u32),
    #[error("{n} does not divide 2^{m} - 1")]
    NotADivisor { n: u64, m: u32 },
    #[error("{0:#x} is not a primitive polynomial of degree {1}")]
    NotPrimitive(u64, u32),
    #[error("inverse of zero")]
    InverseOfZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("the zero element has no minimal polynomial")]
    ZeroElement,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("length {0} is even")]
    EvenLength(u64),
    #[error("coefficient outside GF(2) while expanding a conjugate product")]
    NonBinaryCoefficient,
    #[error("defining set is not closed under doubling: {present} present, {missing} missing")]
    NotDoublingClosed { present: u64, missing: u64 },
    #[error("residue {residue} is outside 0..{n}")]
    ResidueOutOfRange { residue: u64, n: u64 },
    #[error("designed distance {delta} outside 2..={n}")]
    DesignOutOfRange { delta: usize, n: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("dimension {dim} exceeds the enumeration cap {cap}")]
    ExceedsCap { dim: usize, cap: u32 },
    #[error("inconsistent weight distribution: {0}")]
    InconsistentDistribution(String),
    #[error("non-integral result: {0}")]
    NonIntegral(String),
    #[error("odd weight {0} in the dual code")]
    OddWeightInDual(usize),
    #[error("inconsistent distance bounds: lower {lower} > upper {upper}")]
    InconsistentBounds { lower: usize, upper: usize },
    #[error("horizon {horizon} is below s2 = {s2}")]
    HorizonBelowS2 { horizon: u32, s2: u32 },
    #[error("length {0} is too large for this operation")]
    TooLarge(u64),
    #[error("the code has dimension 0")]
    ZeroCode,
    #[error("no prediction: {0}")]
    NoPrediction(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
