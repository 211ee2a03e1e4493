use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = MetricsError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum MetricsError {
    #[error("failed to access {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid input at line {line}: {message}")]
    Validation { line: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),

    /// Internal (0-based) vertex ids; callers that report to users translate
    /// them through [`crate::Graph::label`].
    #[error(
        "graph is disconnected: vertex {unreachable} is unreachable from vertex {source_vertex}"
    )]
    Disconnected {
        source_vertex: usize,
        unreachable: usize,
    },

    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("distance matrix for {n} vertices exceeds the configured cap of {cap}")]
    MatrixTooLarge { n: usize, cap: usize },
}
