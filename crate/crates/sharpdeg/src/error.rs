use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("not divisible by the hyperplane form (remainder leads with exponent {remainder_lead})")]
    NotDivisible { remainder_lead: String },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported dimension {0}")]
    Dimension(usize),
    #[error("cap exceeded: {what} ({size} > {cap})")]
    CapExceeded { what: String, size: u64, cap: u64 },
    /// A proven inequality failed at runtime.
    #[error("internal contradiction: {0}")]
    Contradiction(String),
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("input error: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Contradiction(_) => 1,
            Error::CapExceeded { .. } => 3,
            _ => 2,
        }
    }
}
