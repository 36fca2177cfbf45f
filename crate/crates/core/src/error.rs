use thiserror::Error;

use crate::parser::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different coefficient rings")]
    RingMismatch,
    #[error("operands live over different variable tables")]
    TableMismatch,
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("unknown block `{0}`")]
    UnknownBlock(String),
    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(String),
    #[error("division is not exact")]
    InexactDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("size guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("operation requires a field")]
    NotAField,
    #[error("invalid modulus {0}: expected an odd prime below 2^31")]
    InvalidModulus(u32),
    #[error("degree {got} too small, need at least {min}")]
    DegreeTooSmall { got: usize, min: usize },
    #[error("both forms have degree zero")]
    BothDegreesZero,
    #[error("both forms are zero")]
    BothZero,
    #[error("leading coefficient zero")]
    LeadingCoefficientZero,
    #[error("the zero vector is not a projective point")]
    ZeroPoint,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("not a permutation: {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("not expressible in the elementary homogeneous symmetric polynomials")]
    NotExpressible,
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("identity check failed: {0}")]
    IdentityFailed(String),
}
