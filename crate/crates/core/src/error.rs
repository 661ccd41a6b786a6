use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("graph has {0} vertices; at most {max} are supported", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("enumeration incomplete: budget of {budget} paths exceeded")]
    Incomplete { budget: usize },

    /// An outcome that would contradict a proven statement. Callers surface
    /// these as counterexample artifacts.
    #[error("critical finding: {0}")]
    Critical(String),

    #[error("no witness in a rotation closure of {} paths", closure.len())]
    WitnessNotFound { closure: Vec<Vec<usize>> },

    #[error("generator failed: {0}")]
    Generator(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }

    pub(crate) fn precondition(message: impl Into<String>) -> Self {
        Error::Precondition(message.into())
    }
}
