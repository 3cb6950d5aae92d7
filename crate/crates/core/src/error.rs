use thiserror::Error;

/// Errors reported by the library.
///
/// The variants fall into three groups that the command-line front end maps
/// onto distinct exit codes: malformed or out-of-contract input, exceeded
/// resource bounds, and internal contradictions (bugs).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("graph contains a loop on edge {edge} (vertex {vertex})")]
    Loop { edge: usize, vertex: usize },

    #[error("dimension mismatch: expected {expected} entries, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("graph is not planar")]
    NotPlanar,

    #[error("graph is not connected")]
    Disconnected,

    #[error("point not in lattice: odd sum over some cycle")]
    NotInLattice,

    #[error("point is not in the dilation {k}·Cut(G)")]
    NotInDilation { k: u32 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("resource limit exceeded: {what} is {actual}, limit {limit}")]
    ResourceLimit {
        what: &'static str,
        actual: u128,
        limit: u128,
    },

    #[error("internal contradiction: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by the caller's input rather than by resource
    /// bounds or internal faults.
    pub fn is_invalid_input(&self) -> bool {
        !matches!(self, Error::ResourceLimit { .. } | Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
