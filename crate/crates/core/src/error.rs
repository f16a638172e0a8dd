use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// A single failed admissibility condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub code: &'static str,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.code, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violations(pub Vec<Violation>);

impl fmt::Display for Violations {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("q = 1 is not allowed here")]
    QEqualsOne,
    #[error("{0}")]
    NoRoots(String),
    #[error("group mismatch: {0}")]
    GroupMismatch(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("elements belong to different presentations")]
    PresentationMismatch,
    #[error("rule violates the termination order: {0}")]
    OrderViolation(String),
    #[error("infinite-dimensional: {0}")]
    InfiniteDimensional(String),
    #[error("rewrite system is not confluent: {0}")]
    NotConfluent(String),
    #[error("inadmissible lifting data: {0}")]
    Inadmissible(Violations),
    #[error("wrong Cartan type: {0}")]
    WrongType(String),
    #[error("Hopf ideal check failed: {0}")]
    HopfIdealFailure(String),
    #[error("element not expressible: {0}")]
    NotExpressible(String),
    #[error("invalid algebra map: {0}")]
    InvalidAlgebraMap(String),
    #[error("wrong datum: {0}")]
    WrongDatum(String),
    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
