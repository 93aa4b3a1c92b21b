use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("at most {max} vertices are supported, got {got}")]
    TooManyVertices { got: usize, max: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameter(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("ground sets overlap: {0}")]
    OverlappingGroundSets(String),
    #[error("face enumeration refused: {count} faces exceed the limit of {limit}")]
    FaceLimit { count: usize, limit: usize },
    #[error("exhaustive search refused: {size} exceeds the limit of {limit}")]
    SearchLimit { size: usize, limit: usize },
    #[error("Alexander duality needs a non-complete complex: {0}")]
    DualityHypothesis(String),
    #[error("illegal collapse step: {0}")]
    IllegalCollapse(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
