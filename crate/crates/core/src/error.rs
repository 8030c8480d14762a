use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid scalar {text:?}: {reason}")]
pub struct ScalarParseError {
    pub text: String,
    pub reason: String,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: expected {expected}, found {found}")]
    Dimension {
        op: &'static str,
        expected: String,
        found: String,
    },

    #[error("cannot construct algebra: {0}")]
    Construction(String),

    /// A commutator of two non-unit basis elements leaves their span.
    #[error(
        "commutator [e{left}, e{right}] has component {component} on the unit e{unit}; \
         imaginary span is not closed"
    )]
    Closure {
        left: usize,
        right: usize,
        unit: usize,
        component: String,
    },

    #[error("structure constants are not antisymmetric: C[{upper}; {left}, {right}] = {value} but C[{upper}; {right}, {left}] = {swapped}")]
    NotAnticommutative {
        upper: usize,
        left: usize,
        right: usize,
        value: String,
        swapped: String,
    },

    #[error("matrix is singular")]
    Singular,

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid document at {path}: {message}")]
    Format { path: String, message: String },

    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn dim(op: &'static str, expected: impl ToString, found: impl ToString) -> Self {
        Error::Dimension {
            op,
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }

    pub(crate) fn format(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Format {
            path: path.into(),
            message: message.into(),
        }
    }
}
