use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(Vertex, Vertex),

    #[error("edge {{{0}, {1}}} does not exist")]
    MissingEdge(Vertex, Vertex),

    #[error("graphs do not share the same underlying topology")]
    TopologyMismatch,

    #[error("graph of order {n} exceeds the cap of {max} vertices for {what}")]
    TooLarge { what: &'static str, n: usize, max: usize },

    #[error("deleting the given edge set does not leave a balanced signed graph")]
    NotBalancing,

    #[error("vertex {0} is not uninformed")]
    NotUninformed(Vertex),

    /// Placement on a vertex that is no longer uninformed, within a run.
    #[error("step {step}: vertex {vertex} is not uninformed")]
    PlacementOnInformed { step: usize, vertex: Vertex },

    #[error("vertex {0} is placed more than once")]
    DuplicatePlacement(Vertex),

    #[error("placement {step} uses -A, which ID mode does not allow")]
    NegativeInfoInIdMode { step: usize },

    #[error("trace is incomplete: uninformed vertices remain")]
    IncompleteTrace,

    #[error("operation requires an rID trace")]
    NotRelaxed,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
