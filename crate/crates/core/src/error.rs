use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("graph is disconnected")]
    Disconnected,

    /// Carries a chordless cycle of length at least 4.
    #[error("graph is not chordal (hole {hole:?})")]
    NotChordal { hole: Vec<usize> },

    #[error("not a permutation of the vertex set: {0}")]
    NotPermutation(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The graph is a single clique, so there is no separator to work with.
    #[error("graph has no minimal separators (single maximal clique)")]
    NoSeparators,

    #[error("operation not applicable: {0}")]
    NotApplicable(String),

    #[error("over budget: {0}")]
    OverBudget(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
