use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameter error: {0}")]
    InvalidParameter(String),

    #[error("degenerate family: no parts given")]
    DegenerateFamily,

    #[error("distance undefined: graph is disconnected")]
    Disconnected,

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("matrix has a non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("matrix is reducible or zero; no Perron vector")]
    Reducible,

    #[error("partition does not match matrix: {0}")]
    PartitionMismatch(String),

    #[error("oracle scale: n = {order}, e = {edges} exceeds n <= 12, e <= 24")]
    OracleScale { order: usize, edges: usize },

    #[error("subset enumeration cap exceeded: n = {order} > cap {cap}")]
    CapExceeded { order: usize, cap: usize },

    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidParameter(msg.into()))
}
