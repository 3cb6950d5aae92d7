use std::collections::VecDeque;

use super::{Cut, Multigraph};
use crate::error::{Error, Result};

fn membership(g: &Multigraph, edges: &[usize]) -> Vec<bool> {
    let mut inside = vec![false; g.edge_count()];
    for &e in edges {
        inside[e] = true;
    }
    inside
}

/// True iff every vertex has even degree in the edge set `f`.
pub fn is_even_subgraph(g: &Multigraph, f: &[usize]) -> bool {
    let mut parity = vec![false; g.vertex_count()];
    for (e, inside) in membership(g, f).into_iter().enumerate() {
        if inside {
            let (u, v) = g.endpoints(e);
            if u != v {
                parity[u] ^= true;
                parity[v] ^= true;
            }
        }
    }
    parity.iter().all(|&odd| !odd)
}

/// Splits an even edge set into edge-disjoint circuits.
///
/// Walks from the lowest unused edge, always leaving a vertex by its lowest
/// unused edge; whenever the walk revisits a vertex on the current trail the
/// closed part is peeled off as a circuit. Each circuit is listed in
/// traversal order.
pub fn euler_cycle_decomposition(g: &Multigraph, f: &[usize]) -> Result<Vec<Vec<usize>>> {
    if !is_even_subgraph(g, f) {
        return Err(Error::Precondition(
            "edge set is not an even subgraph".into(),
        ));
    }
    let mut unused = membership(g, f);
    let mut circuits = Vec::new();
    let next_edge = |v: usize, unused: &mut Vec<bool>| -> Option<usize> {
        let e = g.incident(v).iter().map(|&(e, _)| e).find(|&e| unused[e])?;
        unused[e] = false;
        Some(e)
    };
    while let Some(start) = (0..g.edge_count()).find(|&e| unused[e]) {
        let (s, _) = g.endpoints(start);
        // trail of (vertex, edge used to arrive)
        let mut trail: Vec<(usize, Option<usize>)> = vec![(s, None)];
        let mut on_trail = vec![usize::MAX; g.vertex_count()];
        on_trail[s] = 0;
        loop {
            let (v, _) = *trail.last().unwrap();
            let Some(e) = next_edge(v, &mut unused) else {
                break;
            };
            let w = g.other_end(e, v);
            if on_trail[w] != usize::MAX {
                let pos = on_trail[w];
                let mut circuit: Vec<usize> = trail[pos + 1..]
                    .iter()
                    .map(|&(_, via)| via.unwrap())
                    .collect();
                circuit.push(e);
                for &(x, _) in &trail[pos + 1..] {
                    on_trail[x] = usize::MAX;
                }
                trail.truncate(pos + 1);
                circuits.push(circuit);
            } else {
                on_trail[w] = trail.len();
                trail.push((w, Some(e)));
            }
        }
        debug_assert_eq!(trail.len(), 1, "even subgraph walk must close at its start");
    }
    Ok(circuits)
}

/// BFS spanning forest rooted at the smallest vertex of each component:
/// parent edge and depth per vertex.
fn spanning_forest(g: &Multigraph) -> (Vec<Option<usize>>, Vec<usize>) {
    let n = g.vertex_count();
    let mut parent_edge = vec![None; n];
    let mut depth = vec![0; n];
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &(e, w) in g.incident(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent_edge[w] = Some(e);
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    (parent_edge, depth)
}

/// Fundamental cycles of a BFS spanning forest, one per non-tree edge in
/// edge-id order; each cycle is a sorted list of edge ids.
pub fn cycle_basis(g: &Multigraph) -> Vec<Vec<usize>> {
    let (parent_edge, depth) = spanning_forest(g);
    let tree: Vec<bool> = {
        let mut t = vec![false; g.edge_count()];
        for e in parent_edge.iter().flatten() {
            t[*e] = true;
        }
        t
    };
    let mut basis = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if tree[e] {
            continue;
        }
        let mut cycle = vec![e];
        let (mut a, mut b) = (u, v);
        while a != b {
            if depth[a] >= depth[b] {
                let pe = parent_edge[a].unwrap();
                cycle.push(pe);
                a = g.other_end(pe, a);
            } else {
                let pe = parent_edge[b].unwrap();
                cycle.push(pe);
                b = g.other_end(pe, b);
            }
        }
        cycle.sort_unstable();
        basis.push(cycle);
    }
    basis
}

/// All simple cycles (as sorted edge-id lists), up to `limit` of them.
///
/// Each cycle is found once from its smallest vertex and smallest first
/// edge; parallel edges give 2-cycles and loops give 1-cycles.
pub fn simple_cycles(g: &Multigraph, limit: usize) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if u == v {
            out.push(vec![e]);
        }
    }
    for s in 0..n {
        // cycles whose smallest vertex is s; direction fixed by requiring the
        // first edge id to be smaller than the closing edge id
        let mut on_path = vec![false; n];
        on_path[s] = true;
        let mut path_edges: Vec<usize> = Vec::new();
        fn dfs(
            g: &Multigraph,
            s: usize,
            v: usize,
            on_path: &mut Vec<bool>,
            path_edges: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
            limit: usize,
        ) {
            for &(e, w) in g.incident(v) {
                if out.len() >= limit {
                    return;
                }
                if w == v || w < s || path_edges.last() == Some(&e) {
                    continue;
                }
                if w == s {
                    if !path_edges.is_empty() && path_edges[0] < e {
                        let mut c = path_edges.clone();
                        c.push(e);
                        c.sort_unstable();
                        out.push(c);
                    }
                    continue;
                }
                if on_path[w] {
                    continue;
                }
                on_path[w] = true;
                path_edges.push(e);
                dfs(g, s, w, on_path, path_edges, out, limit);
                path_edges.pop();
                on_path[w] = false;
            }
        }
        dfs(g, s, s, &mut on_path, &mut path_edges, &mut out, limit);
        if out.len() >= limit {
            break;
        }
    }
    out.truncate(limit);
    out
}

/// Finds a cut whose crossing edge set is exactly `e1`, by 2-coloring each
/// component (edges of `e1` change sides, the others keep them).
pub fn recover_cut_from_edgeset(g: &Multigraph, e1: &[usize]) -> Option<Cut> {
    let crossing = membership(g, e1);
    let n = g.vertex_count();
    let mut side: Vec<Option<bool>> = vec![None; n];
    for root in 0..n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let sv = side[v].unwrap();
            for &(e, w) in g.incident(v) {
                let want = sv ^ crossing[e];
                match side[w] {
                    None => {
                        side[w] = Some(want);
                        queue.push_back(w);
                    }
                    Some(s) if s != want => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(Cut::from_membership(
        side.into_iter().map(|s| s.unwrap()).collect(),
    ))
}

/// The bipartition as a cut crossing every edge, if `g` is bipartite.
pub fn is_bipartite(g: &Multigraph) -> Option<Cut> {
    let all: Vec<usize> = (0..g.edge_count()).collect();
    recover_cut_from_edgeset(g, &all)
}
