use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent instance data.
    #[error("invalid input: {0}")]
    Input(String),

    /// Text that could not be parsed; `line` is 1-based.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// The operation is not defined for the given pattern class.
    #[error("unsupported pattern class t={t}: {msg}")]
    UnsupportedClass { t: u8, msg: String },

    /// A size or search budget was exceeded.
    #[error("resource limit: {0}")]
    Resource(String),

    /// An operation was called outside its precondition, or an internal
    /// invariant did not hold.
    #[error("contract violation: {0}")]
    Contract(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
