use thiserror::Error;

/// Errors raised by the group engine and everything built on top of it.
///
/// Each variant carries the stable code used in reports and CLI output.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ASYMMETRIC_MATRIX: m[{0}][{1}] != m[{1}][{0}]")]
    AsymmetricMatrix(usize, usize),
    #[error("BAD_DIAGONAL: m[{0}][{0}] must be 1")]
    BadDiagonal(usize),
    #[error("ENTRY_BELOW_2: m[{0}][{1}] = {2}")]
    EntryBelow2(usize, usize, u32),
    #[error("DUPLICATE_LABEL: {0}")]
    DuplicateLabel(String),
    #[error("BAD_SHAPE: {0}")]
    BadShape(String),
    #[error("UNKNOWN_SYSTEM: {0}")]
    UnknownSystem(String),
    #[error("UNKNOWN_GENERATOR: {0}")]
    UnknownGenerator(String),
    #[error("CAP_EXCEEDED: more than {0} cosets")]
    CapExceeded(usize),
    #[error("BAD_INDEX: {0}")]
    BadIndex(usize),
    #[error("BAD_SUBSET: {0}")]
    BadSubset(String),
    #[error("BAD_START: {0}")]
    BadStart(String),
    #[error("GUARD: {0}")]
    Guard(String),
    #[error("AUTOMORPHISM_CAP: backtracking exceeded {0} nodes")]
    AutomorphismCap(usize),
    #[error("DEGENERATE: e(H) equals the larger part size {0}")]
    Degenerate(usize),
    #[error("BAD_INPUT: {0}")]
    BadInput(String),
    #[error("BAD_RANGE: {0}")]
    BadRange(String),
    #[error("BUDGET_EXCEEDED: {0} maps exceed budget {1}")]
    BudgetExceeded(u128, u128),
    #[error("PARSE: {0}")]
    Parse(String),
}

impl Error {
    /// The short upper-case code, e.g. `CAP_EXCEEDED`.
    pub fn code(&self) -> &'static str {
        match self {
            Error::AsymmetricMatrix(..) => "ASYMMETRIC_MATRIX",
            Error::BadDiagonal(..) => "BAD_DIAGONAL",
            Error::EntryBelow2(..) => "ENTRY_BELOW_2",
            Error::DuplicateLabel(..) => "DUPLICATE_LABEL",
            Error::BadShape(..) => "BAD_SHAPE",
            Error::UnknownSystem(..) => "UNKNOWN_SYSTEM",
            Error::UnknownGenerator(..) => "UNKNOWN_GENERATOR",
            Error::CapExceeded(..) => "CAP_EXCEEDED",
            Error::BadIndex(..) => "BAD_INDEX",
            Error::BadSubset(..) => "BAD_SUBSET",
            Error::BadStart(..) => "BAD_START",
            Error::Guard(..) => "GUARD",
            Error::AutomorphismCap(..) => "AUTOMORPHISM_CAP",
            Error::Degenerate(..) => "DEGENERATE",
            Error::BadInput(..) => "BAD_INPUT",
            Error::BadRange(..) => "BAD_RANGE",
            Error::BudgetExceeded(..) => "BUDGET_EXCEEDED",
            Error::Parse(..) => "PARSE",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
