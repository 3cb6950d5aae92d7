//! Planarity testing and planar duals.
//!
//! Each biconnected block of the underlying simple graph is embedded with
//! the Demoucron–Malgrange–Pertuiset path-addition algorithm; block
//! rotations are spliced at cut vertices and parallel edges are inserted as
//! adjacent edge-ends. The resulting rotation system is re-traced and checked
//! against Euler's formula before it is returned.

use std::collections::VecDeque;

use serde::Serialize;

use super::Multigraph;
use crate::error::{Error, Result};

/// One direction of an edge. `forward` runs from the first listed endpoint
/// to the second.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Dart {
    pub edge: usize,
    pub forward: bool,
}

impl Dart {
    pub fn new(edge: usize, forward: bool) -> Self {
        Dart { edge, forward }
    }

    pub fn reversed(self) -> Self {
        Dart {
            edge: self.edge,
            forward: !self.forward,
        }
    }

    pub fn tail(self, g: &Multigraph) -> usize {
        let (u, v) = g.endpoints(self.edge);
        if self.forward {
            u
        } else {
            v
        }
    }

    pub fn head(self, g: &Multigraph) -> usize {
        self.reversed().tail(g)
    }

    /// The dart of `e` leaving `v` (for a loop, the forward one).
    pub fn leaving(g: &Multigraph, e: usize, v: usize) -> Self {
        Dart::new(e, g.endpoints(e).0 == v)
    }
}

/// A combinatorial embedding: the cyclic order of darts leaving each vertex,
/// and the faces it traces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlanarEmbedding {
    pub rotation: Vec<Vec<Dart>>,
    /// Face boundary walks; an isolated vertex contributes one empty walk.
    pub faces: Vec<Vec<Dart>>,
}

impl PlanarEmbedding {
    /// Builds an embedding from a rotation system after checking that it is
    /// planar (Euler's formula per component).
    pub fn from_rotation(g: &Multigraph, rotation: Vec<Vec<Dart>>) -> Result<Self> {
        let faces = trace_faces(g, &rotation)?;
        let emb = PlanarEmbedding { rotation, faces };
        if !emb.satisfies_euler(g) {
            return Err(Error::InvalidInput(
                "rotation system does not describe a planar embedding".into(),
            ));
        }
        Ok(emb)
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// `|V| - |E| + |F| = 2` on every connected component.
    pub fn satisfies_euler(&self, g: &Multigraph) -> bool {
        let (count, comp) = g.components();
        let mut chi = vec![0i64; count];
        for c in &comp {
            chi[*c] += 1;
        }
        for &(u, _) in g.edges() {
            chi[comp[u]] -= 1;
        }
        let mut empty_seen = 0;
        for face in &self.faces {
            match face.first() {
                Some(d) => chi[comp[d.tail(g)]] += 1,
                None => empty_seen += 1,
            }
        }
        let isolated: Vec<usize> = (0..g.vertex_count())
            .filter(|&v| g.incident(v).is_empty())
            .collect();
        if empty_seen != isolated.len() {
            return false;
        }
        for v in isolated {
            chi[comp[v]] += 1;
        }
        chi.iter().all(|&x| x == 2)
    }

    /// Face index of every dart.
    pub fn face_of_darts(&self, g: &Multigraph) -> Vec<[usize; 2]> {
        let mut out = vec![[usize::MAX; 2]; g.edge_count()];
        for (f, face) in self.faces.iter().enumerate() {
            for d in face {
                out[d.edge][usize::from(d.forward)] = f;
            }
        }
        out
    }
}

/// Traces the faces of a rotation system: after arriving at `v` along dart
/// `d`, leave by the dart following `d.reversed()` in `v`'s rotation.
pub fn trace_faces(g: &Multigraph, rotation: &[Vec<Dart>]) -> Result<Vec<Vec<Dart>>> {
    if rotation.len() != g.vertex_count() {
        return Err(Error::DimensionMismatch {
            expected: g.vertex_count(),
            got: rotation.len(),
        });
    }
    // position of every dart in its tail's rotation
    let mut position = vec![[usize::MAX; 2]; g.edge_count()];
    for (v, rot) in rotation.iter().enumerate() {
        for (i, d) in rot.iter().enumerate() {
            if d.edge >= g.edge_count() || d.tail(g) != v {
                return Err(Error::InvalidInput(format!(
                    "rotation at vertex {v} lists a dart of edge {} not leaving it",
                    d.edge
                )));
            }
            let slot = &mut position[d.edge][usize::from(d.forward)];
            if *slot != usize::MAX {
                return Err(Error::InvalidInput(format!(
                    "dart of edge {} listed twice",
                    d.edge
                )));
            }
            *slot = i;
        }
    }
    if position.iter().flatten().any(|&p| p == usize::MAX) {
        return Err(Error::InvalidInput("rotation system misses a dart".into()));
    }
    let mut visited = vec![[false; 2]; g.edge_count()];
    let mut faces = Vec::new();
    for e in 0..g.edge_count() {
        for forward in [true, false] {
            if visited[e][usize::from(forward)] {
                continue;
            }
            let start = Dart::new(e, forward);
            let mut face = Vec::new();
            let mut d = start;
            loop {
                visited[d.edge][usize::from(d.forward)] = true;
                face.push(d);
                let h = d.head(g);
                let back = d.reversed();
                let rot = &rotation[h];
                let i = position[back.edge][usize::from(back.forward)];
                d = rot[(i + 1) % rot.len()];
                if d == start {
                    break;
                }
            }
            faces.push(face);
        }
    }
    for v in 0..g.vertex_count() {
        if g.incident(v).is_empty() {
            faces.push(Vec::new());
        }
    }
    Ok(faces)
}

/// Biconnected blocks of a simple graph given by sorted neighbor lists;
/// each block is a list of edges `(u, v)`.
fn blocks(adj: &[Vec<usize>]) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        adj: &'a [Vec<usize>],
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<Vec<(usize, usize)>>,
    }
    fn dfs(s: &mut State, u: usize, parent: usize) {
        s.time += 1;
        s.disc[u] = s.time;
        s.low[u] = s.time;
        for i in 0..s.adj[u].len() {
            let v = s.adj[u][i];
            if s.disc[v] == 0 {
                s.stack.push((u, v));
                dfs(s, v, u);
                s.low[u] = s.low[u].min(s.low[v]);
                if s.low[v] >= s.disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        block.push(e);
                        if e == (u, v) {
                            break;
                        }
                    }
                    s.out.push(block);
                }
            } else if v != parent && s.disc[v] < s.disc[u] {
                s.stack.push((u, v));
                s.low[u] = s.low[u].min(s.disc[v]);
            }
        }
    }
    let n = adj.len();
    let mut s = State {
        adj,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..n {
        if s.disc[v] == 0 {
            dfs(&mut s, v, usize::MAX);
        }
    }
    s.out
}

/// Path-addition embedding of a biconnected simple graph with at least three
/// vertices. Returns consistently oriented faces as vertex cycles, or `None`
/// if the block is not planar.
fn embed_block(nv: usize, edges: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    let mut adj = vec![Vec::new(); nv];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for a in &mut adj {
        a.sort_unstable();
    }
    if edges.len() > 3 * nv - 6 {
        return None;
    }
    let mut embedded_edge = vec![vec![false; nv]; nv];
    let mut in_h = vec![false; nv];

    // initial cycle from the first DFS back edge
    let cycle = {
        let mut parent = vec![usize::MAX; nv];
        let mut depth = vec![usize::MAX; nv];
        let mut stack = vec![(0usize, 0usize)];
        depth[0] = 0;
        let mut found = None;
        'outer: while let Some((v, i)) = stack.pop() {
            if i < adj[v].len() {
                stack.push((v, i + 1));
                let w = adj[v][i];
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    parent[w] = v;
                    stack.push((w, 0));
                } else if w != parent[v] && depth[w] < depth[v] {
                    let mut c = vec![v];
                    let mut x = v;
                    while x != w {
                        x = parent[x];
                        c.push(x);
                    }
                    found = Some(c);
                    break 'outer;
                }
            }
        }
        found.expect("a biconnected block with three vertices has a cycle")
    };
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        embedded_edge[a][b] = true;
        embedded_edge[b][a] = true;
        in_h[a] = true;
    }
    let mut embedded_count = cycle.len();
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];

    while embedded_count < edges.len() {
        // fragments: (attachments, path between two attachments)
        let mut fragments: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        for &(u, v) in edges {
            if in_h[u] && in_h[v] && !embedded_edge[u][v] {
                fragments.push((vec![u.min(v), u.max(v)], vec![u, v]));
            }
        }
        let mut comp = vec![usize::MAX; nv];
        for start in 0..nv {
            if in_h[start] || comp[start] != usize::MAX {
                continue;
            }
            let id = fragments.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut queue = VecDeque::from([start]);
            let mut attach = Vec::new();
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if in_h[y] {
                        attach.push(y);
                    } else if comp[y] == usize::MAX {
                        comp[y] = id;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
            attach.sort_unstable();
            attach.dedup();
            // path: attachment a -> component -> attachment b != a
            let a = attach[0];
            let entry = *adj[a].iter().find(|&&y| comp[y] == id).unwrap();
            let mut parent = vec![usize::MAX; nv];
            parent[entry] = entry;
            let mut queue = VecDeque::from([entry]);
            let mut path = None;
            'bfs: while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if in_h[y] && y != a {
                        let mut p = vec![y, x];
                        let mut z = x;
                        while z != entry {
                            z = parent[z];
                            p.push(z);
                        }
                        p.push(a);
                        p.reverse();
                        path = Some(p);
                        break 'bfs;
                    }
                    if !in_h[y] && parent[y] == usize::MAX {
                        parent[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            fragments.push((attach, path?));
        }

        let face_sets: Vec<Vec<bool>> = faces
            .iter()
            .map(|f| {
                let mut s = vec![false; nv];
                for &v in f {
                    s[v] = true;
                }
                s
            })
            .collect();
        let admissible: Vec<Vec<usize>> = fragments
            .iter()
            .map(|(attach, _)| {
                (0..faces.len())
                    .filter(|&f| attach.iter().all(|&a| face_sets[f][a]))
                    .collect()
            })
            .collect();
        if admissible.iter().any(Vec::is_empty) {
            return None;
        }
        let chosen = admissible
            .iter()
            .position(|a| a.len() == 1)
            .unwrap_or(0);
        let face_index = admissible[chosen][0];
        let path = &fragments[chosen].1;

        let face = faces[face_index].clone();
        let (a, b) = (path[0], *path.last().unwrap());
        let i = face.iter().position(|&x| x == a).unwrap();
        let j = face.iter().position(|&x| x == b).unwrap();
        let interior = &path[1..path.len() - 1];
        let arc = |from: usize, to: usize| -> Vec<usize> {
            let mut out = Vec::new();
            let mut t = from;
            loop {
                out.push(face[t]);
                if t == to {
                    break;
                }
                t = (t + 1) % face.len();
            }
            out
        };
        let mut first = arc(i, j);
        first.extend(interior.iter().rev());
        let mut second = arc(j, i);
        second.extend(interior.iter());
        faces[face_index] = first;
        faces.push(second);

        for w in path.windows(2) {
            embedded_edge[w[0]][w[1]] = true;
            embedded_edge[w[1]][w[0]] = true;
            embedded_count += 1;
        }
        for &v in path {
            in_h[v] = true;
        }
    }
    Some(faces)
}

/// Cyclic neighbor order at each vertex from oriented vertex-cycle faces:
/// a face `… u v w …` means `w` follows `u` around `v`.
fn rotation_from_faces(nv: usize, faces: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut succ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv];
    for f in faces {
        let len = f.len();
        for t in 0..len {
            let u = f[(t + len - 1) % len];
            let v = f[t];
            let w = f[(t + 1) % len];
            succ[v].push((u, w));
        }
    }
    succ.into_iter()
        .map(|mut pairs| {
            if pairs.is_empty() {
                return Vec::new();
            }
            pairs.sort_unstable();
            let next = |x: usize| pairs[pairs.binary_search_by_key(&x, |p| p.0).unwrap()].1;
            let start = pairs[0].0;
            let mut order = vec![start];
            let mut x = next(start);
            while x != start {
                order.push(x);
                x = next(x);
            }
            assert_eq!(order.len(), pairs.len(), "face rotation splits into several cycles");
            order
        })
        .collect()
}

/// A planar embedding of `g`, or `None` if `g` is not planar.
pub fn is_planar(g: &Multigraph) -> Option<PlanarEmbedding> {
    let n = g.vertex_count();
    let simple = g.simple_edges();
    if n >= 3 && simple.len() > 3 * n - 6 {
        return None;
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in &simple {
        adj[u].push(v);
        adj[v].push(u);
    }
    for a in &mut adj {
        a.sort_unstable();
    }
    // neighbor rotation of the simple graph, spliced block by block
    let mut simple_rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in blocks(&adj) {
        let mut verts: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
        verts.sort_unstable();
        verts.dedup();
        if verts.len() == 2 {
            simple_rotation[verts[0]].push(verts[1]);
            simple_rotation[verts[1]].push(verts[0]);
            continue;
        }
        let index = |x: usize| verts.binary_search(&x).unwrap();
        let local: Vec<(usize, usize)> = block.iter().map(|&(u, v)| (index(u), index(v))).collect();
        let faces = embed_block(verts.len(), &local)?;
        let rot = rotation_from_faces(verts.len(), &faces);
        for (i, order) in rot.into_iter().enumerate() {
            simple_rotation[verts[i]].extend(order.into_iter().map(|j| verts[j]));
        }
    }

    // expand to darts: parallel bundles ascend at the smaller endpoint and
    // descend at the larger one, loops sit next to each other
    let mut bundles: std::collections::BTreeMap<(usize, usize), Vec<usize>> = Default::default();
    let mut loops: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if u == v {
            loops[u].push(e);
        } else {
            bundles.entry((u.min(v), u.max(v))).or_default().push(e);
        }
    }
    let mut rotation: Vec<Vec<Dart>> = vec![Vec::new(); n];
    for v in 0..n {
        for &u in &simple_rotation[v] {
            let bundle = &bundles[&(u.min(v), u.max(v))];
            if v < u {
                rotation[v].extend(bundle.iter().map(|&e| Dart::leaving(g, e, v)));
            } else {
                rotation[v].extend(bundle.iter().rev().map(|&e| Dart::leaving(g, e, v)));
            }
        }
        for &e in &loops[v] {
            rotation[v].push(Dart::new(e, true));
            rotation[v].push(Dart::new(e, false));
        }
    }
    let emb = PlanarEmbedding::from_rotation(g, rotation)
        .expect("path-addition embedding must satisfy Euler's formula");
    Some(emb)
}

/// The planar dual together with the edge correspondence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualMap {
    pub dual: Multigraph,
    /// `edge_bijection[e]` is the dual edge crossing primal edge `e`.
    pub edge_bijection: Vec<usize>,
}

/// One dual vertex per face, one dual edge per primal edge joining the faces
/// on its two sides (a loop when both sides are the same face).
pub fn dual_graph(g: &Multigraph, emb: &PlanarEmbedding) -> Result<DualMap> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let faces = trace_faces(g, &emb.rotation)?;
    if faces != emb.faces {
        return Err(Error::InvalidInput(
            "embedding faces do not match its rotation system".into(),
        ));
    }
    let sides = emb.face_of_darts(g);
    let edges: Vec<(usize, usize)> = sides.iter().map(|&[back, fwd]| (fwd, back)).collect();
    let dual = Multigraph::new_allow_loops(emb.faces.len(), edges)?;
    Ok(DualMap {
        dual,
        edge_bijection: (0..g.edge_count()).collect(),
    })
}
