use thiserror::Error;

use crate::graph::{Edge, Subsystem};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("coordinate ({i}, {j}, {k}) out of range for dims ({m}, {p}, {q})")]
    CoordOutOfRange {
        i: usize,
        j: usize,
        k: usize,
        m: usize,
        p: usize,
        q: usize,
    },

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop edge at vertex {0}")]
    Loop(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("density matrix undefined for a graph without edges")]
    DensityUndefined,

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("matrix order {order} does not match dims product {product}")]
    DimsMismatch { order: usize, product: usize },

    #[error("zero polynomial has no well-defined root count")]
    ZeroPolynomial,

    #[error("degree condition fails; no edge-orbit decomposition exists")]
    DegreeConditionFails,

    #[error("orbit pairing failure: edge {edge} has no partner {missing} under T_{subsystem}")]
    OrbitPairing {
        edge: Edge,
        missing: Edge,
        subsystem: Subsystem,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: {source}")]
    Validation {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("{0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
