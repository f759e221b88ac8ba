use thiserror::Error;

use crate::graph::NodeId;

/// Errors produced by graph construction, the centrality measures and the
/// experiments built on top of them.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("node {0} is not in the graph")]
    UnknownNode(NodeId),

    #[error("{0}")]
    Io(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A parameter is out of range for the graph it is applied to
    /// (density on fewer than two nodes, removing every node, ...).
    #[error("{0}")]
    Domain(String),

    #[error("{measure} did not converge after {iterations} iterations (residual {residual:e})")]
    Convergence {
        measure: &'static str,
        iterations: usize,
        residual: f64,
    },

    /// Brute-force oracles refuse inputs above their cost guard.
    #[error("oracle refused input: {0}")]
    Refused(String),

    #[error("shape mismatch: {0}")]
    Shape(String),
}

pub type Result<T> = std::result::Result<T, Error>;
