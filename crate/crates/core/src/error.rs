use thiserror::Error;

/// Errors raised by constructors, parsers and checks in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {n_vertices} vertices")]
    VertexOutOfRange { vertex: usize, n_vertices: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("colouring covers {got} vertices but the graph has {expected}")]
    NotTotal { expected: usize, got: usize },

    #[error("colour {colour} at vertex {vertex} is outside the palette of size {palette}")]
    ColourOutOfPalette {
        vertex: usize,
        colour: usize,
        palette: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("size overflow: {0}")]
    Overflow(&'static str),

    #[error("oracle refused a graph on {n_vertices} vertices (guard is {guard})")]
    OracleGuard { n_vertices: usize, guard: usize },

    #[error("partition boundaries do not satisfy the concentration bounds")]
    BoundsNotSatisfied,

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
