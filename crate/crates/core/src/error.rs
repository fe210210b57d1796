use thiserror::Error;

use crate::diffalg::DiffPoly;
use crate::exprio::ParseError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An antiderivative was required but does not exist in the algebra.
    /// `witness` is the nonzero Euler derivative (or the offending constant).
    #[error("{context} is not a total derivative (Euler witness: {witness})")]
    NotExact { context: String, witness: DiffPoly },

    #[error("hierarchy lost locality at level {level}: {source}")]
    LocalityLost {
        level: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("hierarchy depth {requested} exceeds the configured limit {limit}")]
    DepthExceeded { requested: usize, limit: usize },

    #[error("operation is defined for plane curves only, but the input contains G: {0}")]
    NonFlat(DiffPoly),

    #[error("degenerate grid: {0}")]
    DegenerateGrid(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl Error {
    pub fn not_exact(context: impl Into<String>, witness: DiffPoly) -> Self {
        Error::NotExact {
            context: context.into(),
            witness,
        }
    }

    pub(crate) fn with_context(self, context: impl Into<String>) -> Self {
        match self {
            Error::NotExact { witness, .. } => Error::NotExact {
                context: context.into(),
                witness,
            },
            other => other,
        }
    }
}
