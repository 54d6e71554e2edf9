use thiserror::Error;

/// Errors raised by the library.
///
/// Every variant carries enough context to be printed directly to a user;
/// the CLI maps [`Error::Violation`] to exit status 2 and everything else to 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid index tuple {0:?}: entries must be positive, strictly increasing, and of even length")]
    InvalidTuple(Vec<u32>),

    #[error("invalid lattice point ({row},{col}): need 1 <= row < col")]
    InvalidPoint { row: u32, col: u32 },

    #[error("index {index} out of range for a {n}x{n} matrix")]
    IndexOutOfRange { index: u32, n: u32 },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("tableaux have different shapes: {left:?} vs {right:?}")]
    ShapeMismatch { left: Vec<usize>, right: Vec<usize> },

    #[error("entry {0} is not at a corner of the tableau")]
    NotACorner(u32),

    #[error("not in BKRS image format: {0}")]
    NotInImage(String),

    #[error("zero polynomial has no initial term")]
    ZeroPolynomial,

    #[error("{0}")]
    Precondition(String),

    #[error("{what} would produce {count} items, above the cap of {cap}")]
    LimitExceeded { what: &'static str, count: u128, cap: u128 },

    #[error(
        "Buchberger budget exceeded after {pairs_processed} pairs ({pairs_pending} pending, basis size {basis_len})"
    )]
    BudgetExceeded {
        pairs_processed: usize,
        pairs_pending: usize,
        basis_len: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("verification failed: {0}")]
    Violation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
