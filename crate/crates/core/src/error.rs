use thiserror::Error;

use crate::geometry::TaggedEdge;

/// Errors raised by the combinatorial model.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} is outside 1..={n}")]
    InvalidVertex { vertex: u32, n: u32 },

    #[error("polygon size {n} is unsupported (allowed range {min}..={max})")]
    UnsupportedSize { n: u32, min: u32, max: u32 },

    #[error("illegal edge {edge} for n = {n}: {reason}")]
    IllegalEdge { edge: String, n: u32, reason: String },

    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("edges {0} and {1} cross")]
    Crossing(TaggedEdge, TaggedEdge),

    #[error("edge set is not maximal: {0} is compatible with every member")]
    NotMaximal(TaggedEdge),

    #[error("edge {0} is not part of the triangulation")]
    EdgeNotInTriangulation(TaggedEdge),

    #[error("cannot form a quotient at {0}: the edge is not close to the border")]
    InvalidQuotient(TaggedEdge),

    #[error("unknown quiver vertex `{0}`")]
    UnknownVertex(String),

    #[error("model inconsistency: {0}")]
    ModelInconsistency(String),

    #[error("catalog: {0}")]
    Catalog(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
