use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop ({0}, {0}) is not allowed in a simple graph")]
    SelfLoop(usize),

    #[error("graph on {n} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },

    /// A size guard refused the input; lift it with `Guard::Lifted`.
    #[error("{operation} is limited to n <= {limit} (got n = {n}); use the unsafe-size override to lift the guard")]
    SizeGuard {
        operation: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("{operation} requires a connected graph")]
    Disconnected { operation: &'static str },

    #[error("{operation} requires a forest, but the graph has a cycle")]
    NotAForest { operation: &'static str },

    #[error("{operation} requires a tree")]
    NotATree { operation: &'static str },

    #[error("{operation} requires at least {min} vertices (got {n})")]
    TooFewVertices {
        operation: &'static str,
        n: usize,
        min: usize,
    },

    #[error("empty vertex set")]
    EmptyVertexSet,

    #[error("invalid parameters for {context}: {message}")]
    InvalidParameter {
        context: &'static str,
        message: String,
    },

    #[error("precondition of {lemma} violated: {message}")]
    Precondition {
        lemma: &'static str,
        message: String,
    },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
}

impl Error {
    pub(crate) fn invalid(context: &'static str, message: impl Into<String>) -> Self {
        Error::InvalidParameter {
            context,
            message: message.into(),
        }
    }

    pub(crate) fn precondition(lemma: &'static str, message: impl Into<String>) -> Self {
        Error::Precondition {
            lemma,
            message: message.into(),
        }
    }

    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Whether a size guard is enforced.
///
/// Brute-force routines refuse inputs above a documented vertex count unless
/// the guard is lifted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Guard {
    #[default]
    Enforced,
    Lifted,
}

impl Guard {
    pub(crate) fn check(self, operation: &'static str, n: usize, limit: usize) -> Result<()> {
        if self == Guard::Enforced && n > limit {
            return Err(Error::SizeGuard {
                operation,
                n,
                limit,
            });
        }
        Ok(())
    }
}
