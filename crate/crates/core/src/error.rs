use thiserror::Error;

/// Errors raised by the algebra routines and the command-line front end.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("missing value for variable `{0}`")]
    MissingVariable(String),
    #[error("variable `{0}` evaluated at zero under a negative exponent")]
    ZeroAtNegativeExponent(String),
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("element is not even")]
    NotEven,
    #[error("element is not unitary")]
    NotUnitary,
    #[error("matrix is not orthogonal for the hyperbolic form")]
    NotOrthogonal,
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("not a spin element: {0}")]
    NotInSpin(String),
    #[error("twist is not proper: {0}")]
    ImproperTwist(String),
    #[error("no inner representative: {0}")]
    NoInnerRep(String),
    #[error("unknown root `{0}`")]
    UnknownRoot(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Process exit code used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::UnknownSuite(_) | Error::UnknownRoot(_) => 2,
            Error::Internal(_) => 3,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
