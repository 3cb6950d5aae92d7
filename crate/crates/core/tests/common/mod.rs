//! Test-side generators and independent oracles.
#![allow(dead_code)]

use std::collections::BTreeSet;

use cutpoly::graph::{cut_vector, enumerate_cuts, Cut, Multigraph};
use cutpoly::lattice::EdgeVector;
use cutpoly::Limits;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A planar multigraph by construction: stack vertices into faces of a
/// triangulation, keep each edge with probability `keep`, then double a few
/// edges.
pub fn random_planar(rng: &mut ChaCha8Rng, n: usize, keep: f64, parallel: usize) -> Multigraph {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    if n >= 2 {
        edges.push((0, 1));
    }
    if n >= 3 {
        edges.push((0, 2));
        edges.push((1, 2));
    }
    let mut faces: Vec<[usize; 3]> = if n >= 3 { vec![[0, 1, 2], [0, 2, 1]] } else { Vec::new() };
    for v in 3..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        edges.extend([(a, v), (b, v), (c, v)]);
        faces.extend([[a, b, v], [b, c, v], [c, a, v]]);
    }
    let mut kept: Vec<(usize, usize)> = edges.into_iter().filter(|_| rng.gen_bool(keep)).collect();
    for _ in 0..parallel {
        if kept.is_empty() {
            break;
        }
        let e = kept[rng.gen_range(0..kept.len())];
        kept.push(e);
    }
    Multigraph::new(n, kept).unwrap()
}

/// Every sum of `k` cut vectors (as a multiset of cuts).
pub fn all_sums(g: &Multigraph, k: usize) -> BTreeSet<EdgeVector> {
    let vectors: Vec<EdgeVector> = enumerate_cuts(g, &Limits::default())
        .unwrap()
        .iter()
        .map(|c| cut_vector(g, c))
        .collect();
    let mut out = BTreeSet::new();
    let mut idx = vec![0usize; k];
    loop {
        out.insert(EdgeVector::sum(g.edge_count(), idx.iter().map(|&i| &vectors[i])));
        // next non-decreasing index tuple
        let mut pos = k;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if idx[pos] + 1 < vectors.len() {
                idx[pos] += 1;
                for j in pos + 1..k {
                    idx[j] = idx[pos];
                }
                break;
            }
        }
    }
}

/// `φ_{A|B}(δ_{C|D}) = δ_{(A∩D)∪(B∩C) | (A∩C)∪(B∩D)}`, evaluated on sets.
pub fn switch_by_intersections(base: &Cut, c: &Cut) -> Cut {
    let n = base.vertex_count();
    let a: BTreeSet<usize> = base.side_a().into_iter().collect();
    let b: BTreeSet<usize> = base.side_b().into_iter().collect();
    let cc: BTreeSet<usize> = c.side_a().into_iter().collect();
    let d: BTreeSet<usize> = c.side_b().into_iter().collect();
    let side: BTreeSet<usize> = a.intersection(&d).chain(b.intersection(&cc)).copied().collect();
    Cut::from_side(n, side)
}

/// Full box `[0,k]^m` as vectors, lexicographic.
pub fn box_vectors(m: usize, k: i64) -> Vec<EdgeVector> {
    let total = (k + 1).pow(m as u32);
    (0..total)
        .map(|mut code| {
            let mut x = vec![0; m];
            for slot in x.iter_mut().rev() {
                *slot = code % (k + 1);
                code /= k + 1;
            }
            EdgeVector(x)
        })
        .collect()
}

/// Canonical multigraph examples beyond simple graphs.
pub fn multigraph_examples() -> Vec<Multigraph> {
    vec![
        Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap(),
        Multigraph::new(3, vec![(0, 1), (0, 1), (1, 2)]).unwrap(),
        Multigraph::new(3, vec![(0, 1), (1, 2), (2, 0), (2, 0)]).unwrap(),
        Multigraph::new(4, vec![(0, 1), (2, 3)]).unwrap(),
    ]
}
