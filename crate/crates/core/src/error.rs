use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("graph is disconnected: no path between vertices {0} and {1}")]
    Disconnected(usize, usize),

    #[error("{what} is {value}, which exceeds the limit of {limit}")]
    GuardExceeded {
        what: &'static str,
        value: String,
        limit: usize,
    },

    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),

    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("probability {0} is outside [0, 1]")]
    ProbabilityOutOfRange(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("missing data file: {0}")]
    MissingData(String),
}

impl Error {
    pub(crate) fn guard(what: &'static str, value: impl ToString, limit: usize) -> Self {
        Error::GuardExceeded {
            what,
            value: value.to_string(),
            limit,
        }
    }
}
