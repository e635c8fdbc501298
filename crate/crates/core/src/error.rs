use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("constant polynomial")]
    ConstantPolynomial,
    #[error("not a perfect square")]
    NotASquare,
    #[error("characteristic too small")]
    CharacteristicTooSmall,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("singular matrix")]
    Singular,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("modulus not irreducible")]
    ReducibleModulus,
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("not a subalgebra: {0}")]
    NotSubalgebra(String),
    #[error("element outside the algebra")]
    NotInAlgebra,
    #[error("element is not symmetrized for this involution")]
    NotSymmetrized,
    #[error("reduced characteristic polynomial has coefficients outside the base field")]
    CoefficientsNotInBase,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not found (budget {budget}): {what}")]
    NotFound { what: String, budget: u64 },
    #[error("idempotent enumeration infeasible")]
    IdempotentsInfeasible,
    #[error("no primitive element")]
    NoPrimitiveElement,
    #[error("no split neat subalgebra of degree {0}")]
    NoSplitNeat(usize),
    #[error("unsupported extension")]
    UnsupportedExtension,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("serialization: {0}")]
    Serde(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Serde(e.to_string())
    }
}
