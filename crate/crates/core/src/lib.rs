//! Exact computations on cut polytopes of graphs.
//!
//! For a graph `G`, every vertex bipartition `A|B` gives a 0/1 cut vector
//! `δ_{A|B}` on the edges; their convex hull is the cut polytope `Cut(G)`.
//! This crate enumerates cuts and the lattice points of the dilations
//! `k·Cut(G)`, decides gap structure (normality, seminormality, very
//! ampleness via a Hilbert basis), applies the switching symmetries, and
//! decomposes lattice points of `k·Cut(G)` for `k ≤ 3` on planar graphs into
//! sums of `k` cuts by way of a four-coloring.
//!
//! Arithmetic is exact throughout.

pub mod audit;
pub mod decompose;
pub mod error;
pub mod graph;
pub mod lattice;
mod limits;
pub mod polytope;
pub mod switching;

pub use error::{Error, Result};
pub use limits::Limits;
