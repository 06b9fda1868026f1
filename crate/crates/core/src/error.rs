use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus {0} is outside the supported range 2 <= p < 2^31")]
    ModulusOutOfRange(u64),
    #[error("mismatched moduli: {left} and {right}")]
    MismatchedModuli { left: u32, right: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero has no cube coset")]
    ZeroCubeCoset,
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("entry {value} is not a residue mod {modulus}")]
    UnreducedEntry { value: u32, modulus: u32 },
    #[error("basis is not a standard symplectic basis: {0}")]
    NotStandardBasis(String),
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("malformed triple ({0}, {1}, {2}) for half-dimension {3}")]
    MalformedTriple(usize, usize, usize, usize),
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("unknown builtin algebra `{0}`")]
    UnknownBuiltin(String),
    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("enumeration needs {required} presentations, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("internal consistency violation: {0}")]
    Inconsistent(String),
}
