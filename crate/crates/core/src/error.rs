use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a complex on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} appears twice in the same set")]
    DuplicateVertex(usize),
    #[error("a complex needs at least one vertex")]
    NoVertices,
    #[error("at most {max} vertices are supported, got {n}")]
    TooManyVertices { n: usize, max: usize },
    #[error("missing faces must form an antichain: {0:?} contains {1:?}")]
    NotAntichain(Vec<usize>, Vec<usize>),
    #[error("{0:?} is not a face of the complex")]
    NotAFace(Vec<usize>),
    #[error("the complex has no missing faces")]
    NoMissingFaces,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("size guard exceeded: {what} is {value}, limit {limit}")]
    Guard {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("numeric failure: {0}")]
    Numeric(String),
}

pub type Result<T> = std::result::Result<T, Error>;
