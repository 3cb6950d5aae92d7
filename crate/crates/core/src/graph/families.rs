//! Named graph families and isomorphism-class catalogs of small simple graphs.

use std::collections::BTreeSet;

use super::Multigraph;

fn build(n: usize, edges: Vec<(usize, usize)>) -> Multigraph {
    Multigraph::new(n, edges).expect("family constructors produce valid graphs")
}

/// `K_n` with edges in lexicographic order `(0,1), (0,2), …, (n-2,n-1)`.
pub fn complete(n: usize) -> Multigraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    build(n, edges)
}

/// The cycle `0-1-…-(n-1)-0` with edges `(i, i+1)` then the closing edge.
pub fn cycle(n: usize) -> Multigraph {
    assert!(n >= 3, "a simple cycle needs three vertices");
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((n - 1, 0));
    build(n, edges)
}

pub fn path(n: usize) -> Multigraph {
    build(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect())
}

/// Star with center 0.
pub fn star(leaves: usize) -> Multigraph {
    build(leaves + 1, (1..=leaves).map(|i| (0, i)).collect())
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Multigraph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    build(a + b, edges)
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i — i+5`.
pub fn petersen() -> Multigraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((i, i + 5));
    }
    for i in 0..5 {
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, edges)
}

/// The `rows × cols` grid; vertex `r*cols + c`.
pub fn grid(rows: usize, cols: usize) -> Multigraph {
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                edges.push((v, v + 1));
            }
            if r + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    build(rows * cols, edges)
}

/// Canonical code of a simple graph on `n <= 11` vertices: the minimum
/// upper-triangle adjacency bitstring over all vertex orders that list
/// vertices by non-increasing degree.
pub fn canonical_code(n: usize, adjacency: &[u64]) -> u64 {
    assert!(n <= 11, "canonical codes are limited to 11 vertices");
    let degree: Vec<u32> = adjacency.iter().map(|m| m.count_ones()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(degree[v]));
    // class boundaries on positions
    let slot_degree: Vec<u32> = order.iter().map(|&v| degree[v]).collect();

    struct Search<'a> {
        n: usize,
        adjacency: &'a [u64],
        degree: &'a [u32],
        slot_degree: &'a [u32],
        placed: Vec<usize>,
        used: u64,
        best: u64,
    }

    impl Search<'_> {
        fn code_so_far(&self) -> u64 {
            let mut code = 0u64;
            let mut bit = 0;
            for j in 1..self.placed.len() {
                for i in 0..j {
                    if self.adjacency[self.placed[i]] >> self.placed[j] & 1 == 1 {
                        code |= 1 << bit;
                    }
                    bit += 1;
                }
            }
            code
        }

        fn run(&mut self) {
            let p = self.placed.len();
            if p == self.n {
                self.best = self.best.min(self.code_so_far());
                return;
            }
            for v in 0..self.n {
                if self.used >> v & 1 == 1 || self.degree[v] != self.slot_degree[p] {
                    continue;
                }
                self.placed.push(v);
                self.used |= 1 << v;
                self.run();
                self.used &= !(1 << v);
                self.placed.pop();
            }
        }
    }

    let mut search = Search {
        n,
        adjacency,
        degree: &degree,
        slot_degree: &slot_degree,
        placed: Vec::with_capacity(n),
        used: 0,
        best: u64::MAX,
    };
    search.run();
    search.best
}

/// Decodes a canonical code back into a graph with lexicographic edge order.
pub fn from_code(n: usize, code: u64) -> Multigraph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    edges.sort_unstable();
    build(n, edges)
}

/// One representative per isomorphism class of simple graphs on `n`
/// vertices, sorted by edge count and then canonical code.
pub fn isomorphism_classes(n: usize) -> Vec<Multigraph> {
    let mut codes: BTreeSet<u64> = BTreeSet::new();
    if n == 0 {
        return vec![Multigraph::edgeless(0)];
    }
    codes.insert(0);
    for size in 2..=n {
        let mut next = BTreeSet::new();
        for &code in &codes {
            let base = from_code(size - 1, code).adjacency_masks();
            for subset in 0..1u64 << (size - 1) {
                let mut adj = base.clone();
                adj.push(subset);
                for (v, mask) in adj.iter_mut().enumerate().take(size - 1) {
                    if subset >> v & 1 == 1 {
                        *mask |= 1 << (size - 1);
                    }
                }
                next.insert(canonical_code(size, &adj));
            }
        }
        codes = next;
    }
    let mut graphs: Vec<(usize, u64, Multigraph)> = codes
        .into_iter()
        .map(|c| {
            let g = from_code(n, c);
            (g.edge_count(), c, g)
        })
        .collect();
    graphs.sort_by_key(|(m, c, _)| (*m, *c));
    graphs.into_iter().map(|(_, _, g)| g).collect()
}

/// Isomorphism classes of connected simple graphs on `n` vertices.
pub fn connected_classes(n: usize) -> Vec<Multigraph> {
    isomorphism_classes(n)
        .into_iter()
        .filter(Multigraph::is_connected)
        .collect()
}
