use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("arity error: expected {expected}, got {got}")]
    Arity { expected: String, got: usize },

    /// The construction is only defined for the product t-norm.
    #[error("unsupported construction: {0}")]
    UnsupportedConstruction(String),

    #[error("unsupported window side {0}: the triple scheme needs a 3x3 window")]
    UnsupportedWindow(usize),

    #[error("dimension mismatch: {left_w}x{left_h} vs {right_w}x{right_h}")]
    DimensionMismatch {
        left_w: usize,
        left_h: usize,
        right_w: usize,
        right_h: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// NCD is a ratio whose denominator vanishes for an all-black reference.
    #[error("NCD undefined: reference image has zero CIELAB norm")]
    NcdUndefined,
}

impl Error {
    pub(crate) fn arity_at_least(min: usize, got: usize) -> Self {
        Error::Arity {
            expected: format!("at least {min}"),
            got,
        }
    }

    pub(crate) fn arity_exact(expected: usize, got: usize) -> Self {
        Error::Arity {
            expected: expected.to_string(),
            got,
        }
    }
}
