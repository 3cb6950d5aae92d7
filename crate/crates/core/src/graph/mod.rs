//! Loopless multigraphs, cuts, and the combinatorial algorithms built on them.
//!
//! Edges carry stable ids `0..m` given by their position in the edge list.
//! Parallel edges are allowed everywhere. Loops are rejected by
//! [`Multigraph::new`]; only planar duals (built with
//! [`Multigraph::new_allow_loops`]) may contain them.

mod coloring;
mod contract;
mod cut;
mod cycles;
pub mod families;
pub mod io;
mod minor;
mod planar;

pub use coloring::{four_color, is_proper_coloring, Coloring4};
pub use contract::{contract_edges, lift_cut, ContractionResult};
pub use cut::{cut_vector, enumerate_cuts, Cut};
pub use cycles::{
    cycle_basis, euler_cycle_decomposition, is_bipartite, is_even_subgraph,
    recover_cut_from_edgeset, simple_cycles,
};
pub use minor::{has_k5_minor, K5Witness};
pub use planar::{dual_graph, is_planar, trace_faces, Dart, DualMap, PlanarEmbedding};

use serde::Serialize;

use crate::error::{Error, Result};

/// An undirected multigraph on vertices `0..n` with edge ids `0..m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip)]
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl Multigraph {
    /// Builds a loopless multigraph; edge `i` of `edges` gets id `i`.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some((id, &(u, _))) = edges.iter().enumerate().find(|(_, (u, v))| u == v) {
            return Err(Error::Loop { edge: id, vertex: u });
        }
        Self::new_allow_loops(n, edges)
    }

    /// Like [`Multigraph::new`] but keeps loops (planar duals of graphs with
    /// bridges have them).
    pub fn new_allow_loops(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for (id, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "edge {id} = ({u},{v}) references a vertex outside 0..{n}"
                )));
            }
        }
        let mut adjacency = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adjacency[u].push((id, v));
            if u != v {
                adjacency[v].push((id, u));
            }
        }
        Ok(Multigraph {
            n,
            edges,
            adjacency,
        })
    }

    pub fn edgeless(n: usize) -> Self {
        Multigraph {
            n,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// `(edge id, other endpoint)` pairs at `v`, in edge-id order. A loop is
    /// listed once.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    /// Number of edge ends at `v` (a loop counts twice).
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v]
            .iter()
            .map(|&(e, _)| if self.edges[e].0 == self.edges[e].1 { 2 } else { 1 })
            .sum()
    }

    pub fn is_loopless(&self) -> bool {
        self.edges.iter().all(|(u, v)| u != v)
    }

    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Component index per vertex, numbered by smallest member vertex.
    pub fn components(&self) -> (usize, Vec<usize>) {
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = count;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &(_, w) in &self.adjacency[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (count, comp)
    }

    pub fn is_connected(&self) -> bool {
        self.components().0 <= 1
    }

    /// The subgraph induced on `vertices` (ascending), renumbered densely,
    /// together with the original ids of its edges.
    pub fn induced(&self, vertices: &[usize]) -> (Multigraph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        let mut ids = Vec::new();
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                edges.push((index[u], index[v]));
                ids.push(id);
            }
        }
        let g = Multigraph::new_allow_loops(vertices.len(), edges)
            .expect("induced subgraph indices are in range");
        (g, ids)
    }

    /// Simple graph adjacency as bitmasks; requires `n <= 64`.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask adjacency needs at most 64 vertices");
        let mut masks = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            if u != v {
                masks[u] |= 1 << v;
                masks[v] |= 1 << u;
            }
        }
        masks
    }

    /// The underlying simple graph: loops dropped, parallel edges merged.
    pub fn simple_edges(&self) -> Vec<(usize, usize)> {
        let mut set: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|(u, v)| u != v)
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        set.sort_unstable();
        set.dedup();
        set
    }
}
