use crate::error::{Error, Result};

/// Resource bounds for the exponential searches in this crate.
///
/// Every search checks its bound up front and fails with
/// [`Error::ResourceLimit`] instead of running away.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Maximum vertex count for cut enumeration (2^(n-1) cuts).
    pub cut_vertices: usize,
    /// Maximum vertex count for the K5-minor search.
    pub minor_vertices: usize,
    /// Maximum number of parity-feasible candidates visited when enumerating
    /// the lattice points of one dilation.
    pub lattice_candidates: u128,
    /// Maximum ambient dimension for Hilbert basis computation.
    pub hilbert_dimension: usize,
    /// Maximum number of generators for Hilbert basis computation.
    pub hilbert_generators: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            cut_vertices: 20,
            minor_vertices: 15,
            lattice_candidates: 50_000_000,
            hilbert_dimension: 10,
            hilbert_generators: 16,
        }
    }
}

pub(crate) fn check(what: &'static str, actual: impl Into<u128>, limit: impl Into<u128>) -> Result<()> {
    let (actual, limit) = (actual.into(), limit.into());
    if actual > limit {
        Err(Error::ResourceLimit {
            what,
            actual,
            limit,
        })
    } else {
        Ok(())
    }
}
