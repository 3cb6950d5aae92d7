use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use super::Multigraph;
use crate::error::{Error, Result};
use crate::lattice::EdgeVector;
use crate::limits::{self, Limits};

/// An unordered bipartition `A|B` of the vertex set.
///
/// Stored canonically as the side that does not contain vertex 0, so `A|B`
/// and `B|A` compare equal. The empty side is the cut `∅|V` with the all-zero
/// cut vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cut {
    in_a: Vec<bool>,
}

impl Cut {
    pub fn empty(n: usize) -> Self {
        Cut {
            in_a: vec![false; n],
        }
    }

    /// The cut with one side equal to `side` (either side may be given).
    pub fn from_side<I: IntoIterator<Item = usize>>(n: usize, side: I) -> Self {
        let mut in_a = vec![false; n];
        for v in side {
            assert!(v < n, "vertex {v} out of range for cut on {n} vertices");
            in_a[v] = true;
        }
        Cut::from_membership(in_a)
    }

    /// Builds a cut from a membership vector, canonicalizing.
    pub fn from_membership(mut in_a: Vec<bool>) -> Self {
        if in_a.first() == Some(&true) {
            for b in &mut in_a {
                *b = !*b;
            }
        }
        Cut { in_a }
    }

    /// The cut with binary-counting index `index`: bit `j-1` selects vertex `j`.
    pub fn from_index(n: usize, index: u64) -> Self {
        let mut in_a = vec![false; n];
        for (v, slot) in in_a.iter_mut().enumerate().skip(1) {
            *slot = (index >> (v - 1)) & 1 == 1;
        }
        Cut { in_a }
    }

    /// Binary-counting index; `None` if `n > 64`.
    pub fn index(&self) -> Option<u64> {
        if self.in_a.len() > 64 {
            return None;
        }
        Some(
            self.in_a
                .iter()
                .enumerate()
                .skip(1)
                .filter(|(_, &b)| b)
                .map(|(v, _)| 1u64 << (v - 1))
                .sum(),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.in_a.len()
    }

    /// Whether `v` is on the canonical side (the side without vertex 0).
    pub fn contains(&self, v: usize) -> bool {
        self.in_a[v]
    }

    pub fn membership(&self) -> &[bool] {
        &self.in_a
    }

    /// Vertices of the canonical side, ascending.
    pub fn side_a(&self) -> Vec<usize> {
        (0..self.in_a.len()).filter(|&v| self.in_a[v]).collect()
    }

    /// Vertices of the side containing vertex 0, ascending.
    pub fn side_b(&self) -> Vec<usize> {
        (0..self.in_a.len()).filter(|&v| !self.in_a[v]).collect()
    }

    pub fn is_empty(&self) -> bool {
        !self.in_a.iter().any(|&b| b)
    }

    pub fn separates(&self, u: usize, v: usize) -> bool {
        self.in_a[u] != self.in_a[v]
    }

    /// Symmetric difference of canonical sides.
    pub fn symmetric_difference(&self, other: &Cut) -> Cut {
        assert_eq!(self.in_a.len(), other.in_a.len(), "cuts on different vertex sets");
        Cut::from_membership(
            self.in_a
                .iter()
                .zip(&other.in_a)
                .map(|(a, b)| a != b)
                .collect(),
        )
    }

    /// Edge ids of `g` crossing this cut.
    pub fn crossing_edges(&self, g: &Multigraph) -> Vec<usize> {
        g.edges()
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| self.separates(u, v))
            .map(|(e, _)| e)
            .collect()
    }
}

impl PartialOrd for Cut {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders cuts by their binary-counting index (highest vertex most
/// significant).
impl Ord for Cut {
    fn cmp(&self, other: &Self) -> Ordering {
        self.in_a
            .len()
            .cmp(&other.in_a.len())
            .then_with(|| self.in_a.iter().rev().cmp(other.in_a.iter().rev()))
    }
}

impl Serialize for Cut {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.side_a().serialize(s)
    }
}

impl fmt::Display for Cut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |vs: Vec<usize>| {
            vs.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{{{}}}|{{{}}}", side(self.side_a()), side(self.side_b()))
    }
}

/// All `2^(n-1)` cuts of `g`, in binary-counting order starting with the
/// empty cut.
pub fn enumerate_cuts(g: &Multigraph, limits: &Limits) -> Result<Vec<Cut>> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::InvalidInput("graph has no vertices".into()));
    }
    limits::check("vertex count for cut enumeration", n as u64, limits.cut_vertices.min(63) as u64)?;
    Ok((0..1u64 << (n - 1)).map(|i| Cut::from_index(n, i)).collect())
}

/// The 0/1 vector `δ_{A|B}`: 1 on edges separated by the cut.
pub fn cut_vector(g: &Multigraph, c: &Cut) -> EdgeVector {
    assert_eq!(
        c.vertex_count(),
        g.vertex_count(),
        "cut and graph have different vertex counts"
    );
    EdgeVector(
        g.edges()
            .iter()
            .map(|&(u, v)| i64::from(c.separates(u, v)))
            .collect(),
    )
}
