use thiserror::Error;

/// Errors raised anywhere in the sampling pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("variable index {index} out of range (n = {n})")]
    VariableOutOfRange { index: usize, n: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("prime {0} divides a constant denominator")]
    BadPrime(u64),
    #[error("expected a single-output circuit, found {0} outputs")]
    MultiOutput(usize),
    #[error("degree cap {cap} exceeded (reached {reached})")]
    DegreeCap { cap: u32, reached: u32 },
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("polynomial is constant")]
    ConstantPolynomial,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("coordinates not in shape position: {0}")]
    ShapePositionFailure(String),
    #[error("variety is not zero-dimensional")]
    NotZeroDimensional,
    #[error("linear section is not zero-dimensional after {0} attempts")]
    DegenerateSection(usize),
    #[error("genericity retries exhausted after {0} attempts")]
    GenericityExhausted(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
