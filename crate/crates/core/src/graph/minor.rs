//! Exhaustive K5-minor search.
//!
//! Two reductions run first: vertices of degree at most 1 are deleted and
//! degree-2 vertices are contracted into a neighbor (neither changes whether
//! a K5 minor exists, since branch sets of K5 have degree 4). In a connected
//! graph a K5 model can always be grown until it covers every vertex, so the
//! search enumerates partitions of each reduced component into five parts and
//! prunes parts that can no longer become connected or pairwise adjacent.

use serde::Serialize;

use super::Multigraph;
use crate::error::Result;
use crate::limits::{self, Limits};

/// Five vertex-disjoint connected branch sets, pairwise joined by an edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct K5Witness {
    pub branch_sets: Vec<Vec<usize>>,
}

impl K5Witness {
    /// Checks disjointness, connectivity, and pairwise adjacency in `g`.
    pub fn verify(&self, g: &Multigraph) -> bool {
        if self.branch_sets.len() != 5 {
            return false;
        }
        let n = g.vertex_count();
        let mut owner = vec![usize::MAX; n];
        for (i, set) in self.branch_sets.iter().enumerate() {
            if set.is_empty() {
                return false;
            }
            for &v in set {
                if v >= n || owner[v] != usize::MAX {
                    return false;
                }
                owner[v] = i;
            }
        }
        for (i, set) in self.branch_sets.iter().enumerate() {
            let mut seen = vec![false; n];
            let mut stack = vec![set[0]];
            seen[set[0]] = true;
            let mut reached = 1;
            while let Some(v) = stack.pop() {
                for &(_, w) in g.incident(v) {
                    if owner[w] == i && !seen[w] {
                        seen[w] = true;
                        reached += 1;
                        stack.push(w);
                    }
                }
            }
            if reached != set.len() {
                return false;
            }
        }
        let mut adjacent = [[false; 5]; 5];
        for &(u, v) in g.edges() {
            let (a, b) = (owner[u], owner[v]);
            if a != usize::MAX && b != usize::MAX && a != b {
                adjacent[a][b] = true;
                adjacent[b][a] = true;
            }
        }
        (0..5).all(|i| (0..5).all(|j| i == j || adjacent[i][j]))
    }
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&i| mask >> i & 1 == 1)
}

/// Vertices reachable from `start` inside `allowed`.
fn flood(adj: &[u64], start: usize, allowed: u64) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= adj[v];
        }
        next &= allowed & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

struct Reduced {
    adj: Vec<u64>,
    alive: u64,
    /// original vertices merged into each reduced vertex
    members: Vec<u64>,
}

fn reduce(g: &Multigraph) -> Reduced {
    let n = g.vertex_count();
    let mut adj = g.adjacency_masks();
    let mut alive: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut members: Vec<u64> = (0..n).map(|v| 1u64 << v).collect();
    loop {
        let Some(v) = bits(alive).find(|&v| adj[v].count_ones() <= 2) else {
            break;
        };
        let nbrs: Vec<usize> = bits(adj[v]).collect();
        if nbrs.len() == 2 {
            let (a, b) = (nbrs[0], nbrs[1]);
            members[a] |= members[v];
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        for &w in &nbrs {
            adj[w] &= !(1 << v);
        }
        adj[v] = 0;
        alive &= !(1 << v);
    }
    Reduced {
        adj,
        alive,
        members,
    }
}

struct Partition<'a> {
    adj: &'a [u64],
    order: Vec<usize>,
    parts: [u64; 5],
    used: usize,
}

impl Partition<'_> {
    fn unassigned(&self, from: usize) -> u64 {
        self.order[from..].iter().fold(0, |m, &v| m | 1 << v)
    }

    fn neighborhood(&self, set: u64) -> u64 {
        bits(set).fold(0, |m, v| m | self.adj[v])
    }

    fn feasible(&self, next: usize) -> bool {
        let free = self.unassigned(next);
        if self.order.len() - next < 5 - self.used {
            return false;
        }
        for i in 0..self.used {
            let part = self.parts[i];
            let start = part.trailing_zeros() as usize;
            if flood(self.adj, start, part | free) & part != part {
                return false;
            }
        }
        for i in 0..self.used {
            let ni = self.neighborhood(self.parts[i]);
            for j in i + 1..self.used {
                if ni & self.parts[j] != 0 {
                    continue;
                }
                let nj = self.neighborhood(self.parts[j]);
                if ni & free == 0 || nj & free == 0 {
                    return false;
                }
            }
        }
        true
    }

    fn complete(&self) -> bool {
        if self.used < 5 {
            return false;
        }
        for i in 0..5 {
            let start = self.parts[i].trailing_zeros() as usize;
            if flood(self.adj, start, self.parts[i]) != self.parts[i] {
                return false;
            }
            let ni = self.neighborhood(self.parts[i]);
            for j in i + 1..5 {
                if ni & self.parts[j] == 0 {
                    return false;
                }
            }
        }
        true
    }

    fn search(&mut self, next: usize) -> bool {
        if next == self.order.len() {
            return self.complete();
        }
        let v = self.order[next];
        let top = (self.used + 1).min(5);
        for l in 0..top {
            let opened = l == self.used;
            self.parts[l] |= 1 << v;
            if opened {
                self.used += 1;
            }
            if self.feasible(next + 1) && self.search(next + 1) {
                return true;
            }
            if opened {
                self.used -= 1;
            }
            self.parts[l] &= !(1 << v);
        }
        false
    }
}

/// Searches for a K5 minor; returns a verified witness or `None`.
pub fn has_k5_minor(g: &Multigraph, limits: &Limits) -> Result<Option<K5Witness>> {
    let n = g.vertex_count();
    limits::check("vertex count for minor search", n as u64, limits.minor_vertices.min(64) as u64)?;
    if n < 5 {
        return Ok(None);
    }
    let reduced = reduce(g);
    let mut remaining = reduced.alive;
    while remaining != 0 {
        let start = remaining.trailing_zeros() as usize;
        let comp = flood(&reduced.adj, start, reduced.alive);
        remaining &= !comp;
        if comp.count_ones() < 5 {
            continue;
        }
        // BFS order inside the component
        let mut order = vec![start];
        let mut seen = 1u64 << start;
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            for w in bits(reduced.adj[v] & !seen) {
                seen |= 1 << w;
                order.push(w);
            }
            i += 1;
        }
        let mut p = Partition {
            adj: &reduced.adj,
            order,
            parts: [0; 5],
            used: 0,
        };
        if p.search(0) {
            let branch_sets = p
                .parts
                .iter()
                .map(|&part| {
                    let merged = bits(part).fold(0u64, |m, v| m | reduced.members[v]);
                    bits(merged).collect()
                })
                .collect();
            let witness = K5Witness { branch_sets };
            assert!(witness.verify(g), "K5 witness failed verification");
            return Ok(Some(witness));
        }
    }
    Ok(None)
}
