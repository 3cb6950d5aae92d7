//! The cut lattice and exact membership in dilated cut polytopes.
//!
//! The lattice `L` spanned by the cut vectors of a graph is described twice:
//! by parity constraints and by the Hermite normal form of the cut vectors.
//! An integer vector lies in `L` iff it sums evenly over every cycle and
//! agrees on parallel edges (parallel edges cross the same cuts, so the cut
//! vectors of a multigraph span only that subspace). The parity view answers
//! queries; the HNF view exists to cross-check it.

pub mod hnf;
pub mod simplex;
mod vector;

pub use vector::{DilatedPoint, EdgeVector};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::graph::{cut_vector, cycle_basis, enumerate_cuts, Multigraph};
use crate::limits::Limits;

/// Both descriptions of the cut lattice of one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeDescription {
    edge_count: usize,
    /// Edge sets of a fundamental cycle basis; a vector is in the lattice
    /// iff its sum over each set is even.
    pub parity_constraints: Vec<Vec<usize>>,
    /// Pairs `(f, e)`, `f < e`, of parallel edges; `f` is the lowest edge
    /// parallel to `e`. Lattice vectors agree on each pair.
    pub parallel_pairs: Vec<(usize, usize)>,
    /// Hermite normal form of the matrix of all cut vectors.
    pub hnf_basis: hnf::IntMatrix,
}

impl LatticeDescription {
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Index of the lattice in `Z^m` (2 to the cycle rank).
    pub fn index(&self) -> BigInt {
        if self.hnf_basis.len() == self.edge_count {
            hnf::full_rank_index(&self.hnf_basis)
        } else {
            BigInt::from(0)
        }
    }

    /// Integer solvability of `x` against the HNF basis.
    pub fn hnf_contains(&self, x: &EdgeVector) -> bool {
        x.len() == self.edge_count
            && hnf::lattice_contains(
                &self.hnf_basis,
                &x.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>(),
            )
    }
}

/// Parity constraints from a cycle basis and the HNF of all cut vectors.
pub fn lattice_description(g: &Multigraph, limits: &Limits) -> Result<LatticeDescription> {
    let cuts = enumerate_cuts(g, limits)?;
    let rows = cuts
        .iter()
        .map(|c| cut_vector(g, c).iter().map(|&x| BigInt::from(x)).collect());
    Ok(LatticeDescription {
        edge_count: g.edge_count(),
        parity_constraints: cycle_basis(g),
        parallel_pairs: parallel_pairs(g),
        hnf_basis: hnf::hnf_incremental(rows, 64),
    })
}

fn parallel_pairs(g: &Multigraph) -> Vec<(usize, usize)> {
    let mut first: std::collections::HashMap<(usize, usize), usize> = Default::default();
    let mut out = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let key = (u.min(v), u.max(v));
        match first.get(&key) {
            Some(&f) => out.push((f, e)),
            None => {
                first.insert(key, e);
            }
        }
    }
    out
}

/// Parity-rule membership in the cut lattice.
pub fn in_cut_lattice(ld: &LatticeDescription, x: &EdgeVector) -> bool {
    x.len() == ld.edge_count
        && ld.parallel_pairs.iter().all(|&(f, e)| x[f] == x[e])
        && ld
            .parity_constraints
            .iter()
            .all(|cycle| cycle.iter().map(|&e| x[e]).sum::<i64>().is_even())
}

/// Exact test of `target ∈ conv(generators)`.
pub fn lp_member_convex(generators: &[EdgeVector], target: &[BigRational]) -> bool {
    assert!(!generators.is_empty(), "convex hull of no generators");
    // clear denominators: target = y / d
    let d = target
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let y: Vec<BigInt> = target.iter().map(|q| q.numer() * (&d / q.denom())).collect();
    let m = target.len();
    let mut a: Vec<Vec<BigInt>> = (0..m)
        .map(|e| generators.iter().map(|g| BigInt::from(g[e])).collect())
        .collect();
    a.push(vec![BigInt::one(); generators.len()]);
    let mut b = y;
    b.push(d);
    simplex::feasible(&a, &b)
}

/// Exact test of `x / k ∈ conv(generators)` for an integer point.
pub fn in_scaled_hull(generators: &[EdgeVector], x: &EdgeVector, k: u32) -> bool {
    let gens: Vec<Vec<i64>> = generators.iter().map(|g| g.0.clone()).collect();
    simplex::in_scaled_hull(&gens, x.as_slice(), u64::from(k))
}

/// Lattice point of `k·Cut(G)`: in the cut lattice and in the dilated hull.
pub fn in_dilation(g: &Multigraph, ld: &LatticeDescription, p: &DilatedPoint, limits: &Limits) -> Result<bool> {
    if p.vector.len() != g.edge_count() {
        return Err(Error::DimensionMismatch {
            expected: g.edge_count(),
            got: p.vector.len(),
        });
    }
    if p.level == 0 {
        return Err(Error::InvalidInput("dilation level must be at least 1".into()));
    }
    if !in_cut_lattice(ld, &p.vector) {
        return Ok(false);
    }
    let generators: Vec<EdgeVector> = enumerate_cuts(g, limits)?
        .iter()
        .map(|c| cut_vector(g, c))
        .collect();
    Ok(in_scaled_hull(&generators, &p.vector, p.level))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PointJson {
    k: u32,
    x: Vec<i64>,
}

/// Parses a point file `{"k": <int>, "x": [<int>, ...]}`.
pub fn parse_point_json(text: &str) -> Result<DilatedPoint> {
    let raw: PointJson = serde_json::from_str(text)
        .map_err(|e| Error::InvalidInput(format!("point JSON: {e}")))?;
    if raw.k == 0 {
        return Err(Error::InvalidInput("point level k must be at least 1".into()));
    }
    Ok(DilatedPoint::new(EdgeVector(raw.x), raw.k))
}
