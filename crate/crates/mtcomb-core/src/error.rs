use alloc::string::String;
use core::fmt;

/// Failure modes shared by every operation in the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The input violates a documented invariant.
    Validation(String),
    /// A configured resource cap was exceeded. `partial` is set when the
    /// operation had already produced some results before stopping.
    Resource { message: String, partial: bool },
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource { message: msg.into(), partial: false }
    }

    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource { .. })
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Validation(m) => write!(f, "validation error: {m}"),
            Error::Resource { message, partial } => {
                write!(f, "resource limit exceeded: {message}")?;
                if *partial {
                    write!(f, " (partial results discarded)")?;
                }
                Ok(())
            }
        }
    }
}
