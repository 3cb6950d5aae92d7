//! Gaps and the normal, seminormal and very-ample verdicts.
//!
//! A *gap* is a lattice point of `k·Cut(G)` that is not a sum of `k` cut
//! vectors. Gap enumeration walks the box `[0,k]^m` with incremental cycle
//! parity pruning, filters by exact hull membership, and then searches for a
//! decomposition of every survivor.

mod hilbert;

pub use hilbert::{hilbert_basis, HilbertBasisReport};

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Cut;
use crate::lattice::{DilatedPoint, EdgeVector};
use crate::limits::{self, Limits};
use crate::polytope::CutPolytope;
use crate::switching::verify_transitivity;

/// Coordinates fixed before the parallel split.
const SPLIT_DEPTH: usize = 3;

/// Lattice points of `k·Cut(G)`, sorted lexicographically.
pub fn enumerate_lattice_points(
    poly: &CutPolytope,
    k: u32,
    limits: &Limits,
) -> Result<Vec<EdgeVector>> {
    if k == 0 {
        return Err(Error::InvalidInput("dilation level must be at least 1".into()));
    }
    let m = poly.edge_count();
    let constraints = &poly.lattice().parity_constraints;
    // each parallel edge is pinned to its partner and closes one 2-cycle
    let pinned = poly.lattice().parallel_pairs.len();
    let estimate = (f64::from(k) + 1.0).powi((m - pinned) as i32)
        / 2f64.powi((constraints.len() - pinned) as i32);
    if estimate > limits.lattice_candidates as f64 {
        return Err(Error::ResourceLimit {
            what: "lattice point candidates",
            actual: estimate.min(u128::MAX as f64) as u128,
            limit: limits.lattice_candidates,
        });
    }

    // constraints that become fully determined once coordinate e is set
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); m];
    let mut member_of: Vec<Vec<usize>> = vec![Vec::new(); m];
    let mut partner: Vec<Option<usize>> = vec![None; m];
    for &(f, e) in &poly.lattice().parallel_pairs {
        partner[e] = Some(f);
    }
    for (i, c) in constraints.iter().enumerate() {
        if let Some(&last) = c.iter().max() {
            closing[last].push(i);
        }
        for &e in c {
            member_of[e].push(i);
        }
    }
    let walker = Walker {
        poly,
        k: i64::from(k),
        closing: &closing,
        member_of: &member_of,
        partner: &partner,
        level: k,
    };

    let depth = SPLIT_DEPTH.min(m);
    let mut prefixes: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..depth {
        prefixes = prefixes
            .into_iter()
            .flat_map(|p| {
                (0..=i64::from(k)).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    let chunks: Vec<Vec<EdgeVector>> = prefixes
        .par_iter()
        .map(|prefix| {
            let mut x = vec![0; m];
            let mut parity = vec![0u8; constraints.len()];
            let mut out = Vec::new();
            walker.descend(&mut x, &mut parity, 0, prefix, &mut out);
            out
        })
        .collect();
    Ok(chunks.into_iter().flatten().collect())
}

struct Walker<'a> {
    poly: &'a CutPolytope,
    k: i64,
    level: u32,
    closing: &'a [Vec<usize>],
    member_of: &'a [Vec<usize>],
    partner: &'a [Option<usize>],
}

impl Walker<'_> {
    fn descend(
        &self,
        x: &mut Vec<i64>,
        parity: &mut [u8],
        e: usize,
        prefix: &[i64],
        out: &mut Vec<EdgeVector>,
    ) {
        if e == x.len() {
            let v = EdgeVector(x.clone());
            if self.poly.in_hull(&v, self.level) {
                out.push(v);
            }
            return;
        }
        let values: Vec<i64> = match (self.partner[e], prefix.get(e)) {
            (Some(f), Some(&v)) if v != x[f] => Vec::new(),
            (Some(f), _) => vec![x[f]],
            (None, Some(&v)) => vec![v],
            (None, None) => (0..=self.k).collect(),
        };
        for v in values {
            x[e] = v;
            if v & 1 == 1 {
                for &c in &self.member_of[e] {
                    parity[c] ^= 1;
                }
            }
            if self.closing[e].iter().all(|&c| parity[c] == 0) {
                self.descend(x, parity, e + 1, prefix, out);
            }
            if v & 1 == 1 {
                for &c in &self.member_of[e] {
                    parity[c] ^= 1;
                }
            }
        }
        x[e] = 0;
    }
}

/// `k` cuts (repetition and the empty cut allowed) whose vectors sum to `x`,
/// or `None`. Cuts are returned in non-decreasing counting order.
pub fn is_sum_of_k_cuts(poly: &CutPolytope, x: &EdgeVector, k: u32) -> Result<Option<Vec<Cut>>> {
    poly.check_len(x)?;
    if x.iter().any(|&v| v < 0 || v > i64::from(k)) || !poly.in_lattice(x) {
        return Ok(None);
    }
    let mut search = SumSearch {
        poly,
        failed: HashSet::new(),
        chosen: Vec::with_capacity(k as usize),
    };
    let mut residual = x.clone();
    if !search.run(&mut residual, k, 0) {
        return Ok(None);
    }
    let cuts: Vec<Cut> = search.chosen.iter().map(|&i| poly.cuts()[i].clone()).collect();
    let total = EdgeVector::sum(x.len(), search.chosen.iter().map(|&i| &poly.vectors()[i]));
    assert_eq!(&total, x, "decomposition does not sum to the target");
    Ok(Some(cuts))
}

struct SumSearch<'a> {
    poly: &'a CutPolytope,
    failed: HashSet<(usize, u32, EdgeVector)>,
    chosen: Vec<usize>,
}

impl SumSearch<'_> {
    fn run(&mut self, residual: &mut EdgeVector, remaining: u32, start: usize) -> bool {
        if remaining == 0 {
            return residual.is_zero();
        }
        if self.poly.violates_valid_inequality(residual, remaining) {
            return false;
        }
        let key = (start, remaining, residual.clone());
        if self.failed.contains(&key) {
            return false;
        }
        let vectors = self.poly.vectors();
        for (i, c) in vectors.iter().enumerate().skip(start) {
            if c.iter().zip(residual.iter()).any(|(&a, &r)| a > r) {
                continue;
            }
            for (r, &a) in residual.0.iter_mut().zip(c.iter()) {
                *r -= a;
            }
            self.chosen.push(i);
            if self.run(residual, remaining - 1, i) {
                return true;
            }
            self.chosen.pop();
            for (r, &a) in residual.0.iter_mut().zip(c.iter()) {
                *r += a;
            }
        }
        self.failed.insert(key);
        false
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelCount {
    pub k: u32,
    pub lattice_points: usize,
    pub gaps: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapReport {
    pub k_max: u32,
    pub gaps: Vec<DilatedPoint>,
    pub lattice_point_counts: Vec<LevelCount>,
}

/// Gaps at every level `1..=k_max`, ordered by level and then
/// lexicographically.
pub fn find_gaps(poly: &CutPolytope, k_max: u32, limits: &Limits) -> Result<GapReport> {
    let mut gaps = Vec::new();
    let mut counts = Vec::new();
    for k in 1..=k_max {
        let (lattice_points, level_gaps) = gaps_at(poly, k, limits)?;
        counts.push(LevelCount {
            k,
            lattice_points,
            gaps: level_gaps.len(),
        });
        gaps.extend(level_gaps);
    }
    Ok(GapReport {
        k_max,
        gaps,
        lattice_point_counts: counts,
    })
}

/// Number of lattice points at level `k` and the gaps among them.
fn gaps_at(poly: &CutPolytope, k: u32, limits: &Limits) -> Result<(usize, Vec<DilatedPoint>)> {
    let points = enumerate_lattice_points(poly, k, limits)?;
    let flags = points
        .par_iter()
        .map(|x| Ok(is_sum_of_k_cuts(poly, x, k)?.is_none()))
        .collect::<Result<Vec<bool>>>()?;
    let count = points.len();
    let gaps = points
        .into_iter()
        .zip(flags)
        .filter(|&(_, gap)| gap)
        .map(|(x, _)| DilatedPoint::new(x, k))
        .collect();
    Ok((count, gaps))
}

/// Normality can only be refuted by a witness or certified up to a bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum NormalVerdict {
    NormalUpTo { k: u32 },
    GapFound { witness: DilatedPoint },
}

pub fn check_normal(poly: &CutPolytope, k_max: u32, limits: &Limits) -> Result<NormalVerdict> {
    for k in 1..=k_max {
        // stop at the first level that has a gap
        if let Some(witness) = gaps_at(poly, k, limits)?.1.into_iter().next() {
            return Ok(NormalVerdict::GapFound { witness });
        }
    }
    Ok(NormalVerdict::NormalUpTo { k: k_max })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum SeminormalVerdict {
    /// No gap `x` at a level `k` with `3k ≤ k_max` has both `2x` and `3x`
    /// decomposable.
    ConsistentUpTo { k: u32 },
    /// `x` is a gap while `2x` and `3x` are not: the polytope is not seminormal.
    Violation {
        x: DilatedPoint,
        double: Vec<Cut>,
        triple: Vec<Cut>,
    },
}

pub fn check_seminormal(
    poly: &CutPolytope,
    k_max: u32,
    limits: &Limits,
) -> Result<SeminormalVerdict> {
    if k_max < 3 {
        return Err(Error::Precondition(
            "seminormality check needs k_max of at least 3".into(),
        ));
    }
    for k in 1..=k_max / 3 {
        for x in gaps_at(poly, k, limits)?.1 {
            let Some(double) = is_sum_of_k_cuts(poly, &x.vector.scaled(2), 2 * k)? else {
                continue;
            };
            let Some(triple) = is_sum_of_k_cuts(poly, &x.vector.scaled(3), 3 * k)? else {
                continue;
            };
            return Ok(SeminormalVerdict::Violation { x, double, triple });
        }
    }
    Ok(SeminormalVerdict::ConsistentUpTo { k: k_max })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum VeryAmpleVerdict {
    VeryAmple { hilbert_basis: HilbertBasisReport },
    NotVeryAmple { hilbert_basis: HilbertBasisReport },
}

impl VeryAmpleVerdict {
    pub fn is_very_ample(&self) -> bool {
        matches!(self, VeryAmpleVerdict::VeryAmple { .. })
    }
}

/// Switchings act transitively on the vertices, so checking the Hilbert
/// basis of the cone at the origin vertex decides very-ampleness.
pub fn check_very_ample(poly: &CutPolytope, limits: &Limits) -> Result<VeryAmpleVerdict> {
    if !verify_transitivity(poly.graph(), limits)? {
        return Err(Error::Internal("switchings do not act transitively on the cuts".into()));
    }
    limits::check(
        "Hilbert basis generators",
        poly.vectors().len() as u128,
        limits.hilbert_generators as u128,
    )?;
    let report = hilbert_basis(poly.vectors(), &poly.lattice().hnf_basis, limits)?;
    Ok(if report.is_subset_of_cuts {
        VeryAmpleVerdict::VeryAmple { hilbert_basis: report }
    } else {
        VeryAmpleVerdict::NotVeryAmple { hilbert_basis: report }
    })
}
