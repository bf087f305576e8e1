use thiserror::Error;

use crate::multivec::Polyvector;

/// Syntax error in polynomial / polyvector / matrix text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at position {position}")]
pub struct ParseError {
    /// Byte offset into the parsed text.
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, message: impl Into<String>) -> Self {
        Self { position, message: message.into() }
    }
}

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("unknown identifier \"{name}\" at position {position}")]
    UnknownIdentifier { name: String, position: usize },

    #[error("invalid chart: {0}")]
    InvalidChart(String),

    #[error("operands live on different charts")]
    ChartMismatch,

    #[error("variable index {index} out of range for a chart of dimension {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("expected a polyvector of degree {expected}, got degree {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("bivector fails the Jacobi identity; [pi, pi] = {jacobiator}")]
    JacobiFailure { jacobiator: Box<Polyvector> },

    #[error("matrix is not skew-symmetric: {0}")]
    NotSkew(String),

    #[error("chart dimension {0} is odd; a Pfaffian needs an even dimension")]
    OddDimension(usize),

    #[error("Pfaffian vanishes identically: no open dense symplectic leaf")]
    DegenerateEverywhere,

    #[error("operation needs a 2-dimensional chart, got dimension {0}")]
    NotSurface(usize),

    #[error("expected {expected} Betti numbers b0, b1, b2 of the complement, got {found}")]
    BettiCount { expected: usize, found: usize },

    #[error("all inputs are zero")]
    ZeroInput,

    #[error("input polynomial is constant")]
    ConstantInput,

    #[error("degeneracy curve is not reduced (Pfaffian {0} is not squarefree)")]
    NotSquarefree(String),

    #[error("bivector is not weight-homogeneous for the chart weights")]
    NotHomogeneous,

    #[error("Groebner reduction budget of {budget} steps exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("graded piece (k = {k}, weight {weight}) has {size} basis elements, above the cap of {cap}")]
    BasisCapExceeded { k: usize, weight: i64, size: usize, cap: usize },
}

/// Coarse classification used to pick process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Parse,
    Precondition,
    Resource,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Parse(_) | Error::UnknownIdentifier { .. } | Error::InvalidChart(_) => {
                ErrorClass::Parse
            }
            Error::BudgetExceeded { .. } | Error::BasisCapExceeded { .. } => ErrorClass::Resource,
            _ => ErrorClass::Precondition,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
