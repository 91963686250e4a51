use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("graph order must be at least {min}, got {got}")]
    InvalidOrder { got: usize, min: usize },

    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("{op}: order {order} exceeds the supported cap of {cap}")]
    SizeCap { op: &'static str, order: usize, cap: usize },

    #[error("power iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("polynomial has no real root")]
    NoRealRoot,

    #[error("edge ({0}, {1}) is not an edge of the host graph")]
    EdgeNotInHost(usize, usize),

    #[error("assignment has {got} entries, graph has {expected} vertices")]
    AssignmentLength { got: usize, expected: usize },

    #[error("invalid H-assignment character {0:?}")]
    AssignmentChar(char),

    #[error("matrix is not square or has inconsistent rows")]
    NotSquare,

    #[error("parameter out of domain: {0}")]
    Domain(String),
}
