use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("subset belongs to a universe of size {found}, expected {expected}")]
    UniverseMismatch { expected: usize, found: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("isolated vertices: {}", .0.join(", "))]
    IsolatedVertices(Vec<String>),

    #[error("covering method inapplicable: {0}")]
    Inapplicable(String),

    #[error("endpoints must be distinct vertices")]
    SameVertex,

    #[error("vertex index {0} is not in the graph")]
    UnknownVertex(usize),

    #[error("vertex set is empty")]
    EmptyVertexSet,

    #[error("loop at vertex `{0}`")]
    Loop(String),

    #[error("duplicate edge {0}{1}")]
    DuplicateEdge(String, String),

    #[error("incidence column {0} does not have exactly two 1-entries")]
    BadColumn(usize),

    #[error("incidence entry at row {row}, column {col} is not 0 or 1")]
    BadEntry { row: usize, col: usize },

    #[error("incidence matrix is not rectangular or does not match its label count")]
    ShapeMismatch,

    #[error("circuit family is not a covering: {0}")]
    NotACovering(String),

    #[error("ground set is empty")]
    EmptyGround,

    #[error("{what} has size {found}, limit is {limit}")]
    TooLarge {
        what: &'static str,
        limit: usize,
        found: usize,
    },

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
