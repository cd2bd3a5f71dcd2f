use thiserror::Error;

/// Errors raised by the set kernel, the encoders and the simulator.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("node {node} is out of range for a graph with {node_count} nodes")]
    NodeOutOfRange { node: usize, node_count: usize },

    #[error("graph would grow to {nodes} nodes, above the configured limit of {limit}")]
    ResourceLimit { nodes: usize, limit: usize },

    #[error("set is not a von Neumann ordinal")]
    NotAnOrdinal,

    #[error("set is not a Kuratowski pair")]
    NotAPair,

    #[error("malformed rational encoding: {0}")]
    MalformedRational(&'static str),

    #[error("invalid network: {0}")]
    InvalidNetwork(String),

    #[error("labeling refers to node {node}, but the graph has {node_count} nodes")]
    InvalidLabeling { node: usize, node_count: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
