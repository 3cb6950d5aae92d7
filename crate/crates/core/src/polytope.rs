//! A graph bundled with its cuts, cut vectors, and cut lattice.

use crate::error::{Error, Result};
use crate::graph::{cut_vector, enumerate_cuts, simple_cycles, Cut, Multigraph};
use crate::lattice::{
    in_cut_lattice, in_scaled_hull, lattice_description, DilatedPoint, EdgeVector,
    LatticeDescription,
};
use crate::limits::Limits;

/// Cycles beyond this count are not used for the inequality prefilter.
const PREFILTER_CYCLES: usize = 4096;

/// Precomputed data for membership questions about `k·Cut(G)`.
#[derive(Clone, Debug)]
pub struct CutPolytope {
    graph: Multigraph,
    cuts: Vec<Cut>,
    vectors: Vec<EdgeVector>,
    lattice: LatticeDescription,
    cycles: Vec<Vec<usize>>,
}

impl CutPolytope {
    pub fn new(g: &Multigraph, limits: &Limits) -> Result<Self> {
        let cuts = enumerate_cuts(g, limits)?;
        let vectors = cuts.iter().map(|c| cut_vector(g, c)).collect();
        Ok(CutPolytope {
            graph: g.clone(),
            cuts,
            vectors,
            lattice: lattice_description(g, limits)?,
            cycles: simple_cycles(g, PREFILTER_CYCLES),
        })
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// All cuts in binary-counting order.
    pub fn cuts(&self) -> &[Cut] {
        &self.cuts
    }

    /// Cut vectors, aligned with [`CutPolytope::cuts`].
    pub fn vectors(&self) -> &[EdgeVector] {
        &self.vectors
    }

    pub fn lattice(&self) -> &LatticeDescription {
        &self.lattice
    }

    pub fn in_lattice(&self, x: &EdgeVector) -> bool {
        in_cut_lattice(&self.lattice, x)
    }

    /// True if `x / k` violates `0 ≤ x ≤ 1` or a cycle inequality
    /// `x(F) − x(C∖F) ≤ |F| − 1` (`F ⊆ C` odd). These hold on every cut
    /// vector, so a violation proves `x ∉ k·Cut(G)`.
    pub fn violates_valid_inequality(&self, x: &EdgeVector, k: u32) -> bool {
        let k = i64::from(k);
        if x.iter().any(|&v| v < 0 || v > k) {
            return true;
        }
        // scaled by k: min over odd F of Σ_F (k − x) + Σ_{C∖F} x must be ≥ k
        self.cycles.iter().any(|cycle| {
            let mut total = 0;
            let mut odd = false;
            let mut flip = i64::MAX;
            for &e in cycle {
                let in_f = k - x[e];
                let out_f = x[e];
                if in_f < out_f {
                    total += in_f;
                    odd = !odd;
                } else {
                    total += out_f;
                }
                flip = flip.min((in_f - out_f).abs());
            }
            if !odd {
                total += flip;
            }
            total < k
        })
    }

    /// Whether `p` is a lattice point of `p.level · Cut(G)`.
    pub fn in_dilation(&self, p: &DilatedPoint) -> Result<bool> {
        self.check_len(&p.vector)?;
        if p.level == 0 {
            return Err(Error::InvalidInput("dilation level must be at least 1".into()));
        }
        Ok(self.in_lattice(&p.vector) && self.in_hull(&p.vector, p.level))
    }

    /// `x / k ∈ Cut(G)`, decided exactly; lattice membership not checked.
    pub fn in_hull(&self, x: &EdgeVector, k: u32) -> bool {
        !self.violates_valid_inequality(x, k) && in_scaled_hull(&self.vectors, x, k)
    }

    pub(crate) fn check_len(&self, x: &EdgeVector) -> Result<()> {
        if x.len() != self.edge_count() {
            return Err(Error::DimensionMismatch {
                expected: self.edge_count(),
                got: x.len(),
            });
        }
        Ok(())
    }
}
