use super::{Cut, Multigraph};

/// Result of contracting a set of edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionResult {
    pub contracted: Multigraph,
    /// New vertex of every original vertex.
    pub vertex_map: Vec<usize>,
    /// New edge id of every original edge, `None` for contracted edges and
    /// for edges that became loops.
    pub edge_map: Vec<Option<usize>>,
    /// Original ids of non-contracted edges whose endpoints were merged.
    pub loops_created: Vec<usize>,
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

/// Contracts every edge in `e0`.
///
/// Merged vertices are numbered by the order of their smallest original
/// member, so vertex 0 stays vertex 0. Parallel edges survive; surviving
/// edges whose endpoints merge are listed in `loops_created` and left out of
/// the contracted graph.
pub fn contract_edges(g: &Multigraph, e0: &[usize]) -> ContractionResult {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut contracted_edge = vec![false; g.edge_count()];
    for &e in e0 {
        contracted_edge[e] = true;
        let (u, v) = g.endpoints(e);
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            // keep the smaller vertex as root
            let (lo, hi) = (ru.min(rv), ru.max(rv));
            parent[hi] = lo;
        }
    }
    let mut new_index = vec![usize::MAX; n];
    let mut count = 0;
    let mut vertex_map = vec![0; n];
    for (v, image) in vertex_map.iter_mut().enumerate() {
        let r = find(&mut parent, v);
        if new_index[r] == usize::MAX {
            new_index[r] = count;
            count += 1;
        }
        *image = new_index[r];
    }
    let mut edges = Vec::new();
    let mut edge_map = vec![None; g.edge_count()];
    let mut loops_created = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if contracted_edge[e] {
            continue;
        }
        let (a, b) = (vertex_map[u], vertex_map[v]);
        if a == b {
            loops_created.push(e);
        } else {
            edge_map[e] = Some(edges.len());
            edges.push((a, b));
        }
    }
    ContractionResult {
        contracted: Multigraph::new(count, edges).expect("loops were filtered out"),
        vertex_map,
        edge_map,
        loops_created,
    }
}

/// Pulls a cut of the contracted graph back to the original vertex set.
pub fn lift_cut(c: &Cut, vertex_map: &[usize]) -> Cut {
    Cut::from_membership(vertex_map.iter().map(|&w| c.contains(w)).collect())
}
