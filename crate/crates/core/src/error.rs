use std::io;

use thiserror::Error;

/// Errors produced by graph construction, parsing, certification and solving.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("vertex {vertex} out of range (graph has {count} vertices on that side)")]
    VertexOutOfRange { vertex: usize, count: usize },

    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid or removed edge id {0}")]
    InvalidEdge(usize),

    #[error("graph is not {k}-regular: vertex {vertex} has degree {degree}")]
    NotRegular {
        k: usize,
        vertex: usize,
        degree: usize,
    },

    #[error("graph is not bipartite: {0}")]
    NotBipartite(String),

    #[error("averaging identity violated for color {color}: {detail}")]
    IdentityViolation { color: u32, detail: String },

    #[error("verification failed: {check}: {detail}")]
    VerificationFailed { check: &'static str, detail: String },

    #[error("internal invariant violated: {0}")]
    InvariantViolated(String),

    #[error("construction failed ({0}); retry with a different seed")]
    ConstructionFailed(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }

    pub(crate) fn check(check: &'static str, detail: impl Into<String>) -> Self {
        Error::VerificationFailed {
            check,
            detail: detail.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
