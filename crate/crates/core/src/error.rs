use thiserror::Error;

/// Errors raised while building or evaluating set families.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge {edge:?} has fewer than two vertices")]
    EdgeTooSmall { edge: Vec<usize> },

    #[error("edge {edge:?} appears more than once")]
    DuplicateEdge { edge: Vec<usize> },

    #[error("edges {smaller:?} and {larger:?} are comparable; a clutter must be an antichain")]
    NotAntichain {
        smaller: Vec<usize>,
        larger: Vec<usize>,
    },

    #[error("edge {edge:?} is not an edge of the clutter")]
    EdgeNotFound { edge: Vec<usize> },

    #[error("{what}: size {actual} exceeds the supported bound {limit}")]
    BoundExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("composition {parts:?} does not sum to {n}")]
    CompositionMismatch { parts: Vec<usize>, n: usize },

    #[error("invalid composition part 0 in {parts:?}")]
    ZeroPart { parts: Vec<usize> },

    #[error("element is not homogeneous: found degrees {first} and {second}")]
    MixedDegrees { first: usize, second: usize },

    #[error("tensor arity must be at least 1, got {0}")]
    InvalidArity(usize),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("non-integral coefficient {value} in {what}")]
    NonIntegral { what: &'static str, value: String },

    #[error("malformed instance: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// True for errors caused by exceeding a computational bound rather than bad input.
    pub fn is_resource_bound(&self) -> bool {
        matches!(self, Error::BoundExceeded { .. } | Error::Overflow(_))
    }
}
