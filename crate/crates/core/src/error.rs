use thiserror::Error;

/// Errors raised by graph construction, file handling and the oracle.
///
/// Solver failures have their own type, [`crate::pdpc::SolveError`], since
/// they carry a trace.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range (graph has {num_vertices} vertices)")]
    VertexOutOfRange { vertex: usize, num_vertices: usize },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("construction error: {0}")]
    Construction(String),

    #[error("weld spec error at {path}: {message}")]
    Spec { path: String, message: String },

    #[error("oracle refused: graph has {vertices} vertices, bound is {bound}")]
    OracleBound { vertices: usize, bound: usize },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn spec(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Spec {
            path: path.into(),
            message: message.into(),
        }
    }
}
