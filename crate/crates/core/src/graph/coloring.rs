use serde::Serialize;

use super::{is_planar, Multigraph};
use crate::error::{Error, Result};

/// A vertex coloring with labels `1..=4`; classes may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Coloring4 {
    pub color: Vec<u8>,
}

impl Coloring4 {
    /// Vertices of each color class `1..=4`, ascending.
    pub fn classes(&self) -> [Vec<usize>; 4] {
        let mut out: [Vec<usize>; 4] = Default::default();
        for (v, &c) in self.color.iter().enumerate() {
            out[usize::from(c - 1)].push(v);
        }
        out
    }

    pub fn colors_used(&self) -> usize {
        let mut used = [false; 4];
        for &c in &self.color {
            used[usize::from(c - 1)] = true;
        }
        used.iter().filter(|&&u| u).count()
    }
}

pub fn is_proper_coloring(g: &Multigraph, coloring: &Coloring4) -> bool {
    coloring.color.len() == g.vertex_count()
        && coloring.color.iter().all(|c| (1..=4).contains(c))
        && g
            .edges()
            .iter()
            .all(|&(u, v)| coloring.color[u] != coloring.color[v])
}

/// Exact backtracking 4-coloring of a planar loopless multigraph.
///
/// Vertices are picked by largest saturation (number of distinct colors on
/// colored neighbors), ties going to the lowest index; colors are tried
/// lowest first.
pub fn four_color(g: &Multigraph) -> Result<Coloring4> {
    if let Some((e, &(v, _))) = g.edges().iter().enumerate().find(|(_, (u, v))| u == v) {
        return Err(Error::Loop { edge: e, vertex: v });
    }
    if is_planar(g).is_none() {
        return Err(Error::NotPlanar);
    }
    let n = g.vertex_count();
    let mut neighbors: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (u, v) in g.simple_edges() {
        neighbors[u].push(v);
        neighbors[v].push(u);
    }
    let mut color = vec![0u8; n];
    if !dsatur(&neighbors, &mut color, n) {
        return Err(Error::Internal(
            "no 4-coloring found for a planar graph".into(),
        ));
    }
    let coloring = Coloring4 { color };
    debug_assert!(is_proper_coloring(g, &coloring));
    Ok(coloring)
}

fn dsatur(neighbors: &[Vec<usize>], color: &mut [u8], remaining: usize) -> bool {
    if remaining == 0 {
        return true;
    }
    let mut best: Option<(u32, usize)> = None;
    let mut best_mask = 0u8;
    for v in 0..color.len() {
        if color[v] != 0 {
            continue;
        }
        let mask = neighbors[v]
            .iter()
            .fold(0u8, |m, &w| if color[w] != 0 { m | 1 << (color[w] - 1) } else { m });
        let sat = mask.count_ones();
        if best.is_none_or(|(s, _)| sat > s) {
            best = Some((sat, v));
            best_mask = mask;
        }
    }
    let (_, v) = best.expect("an uncolored vertex remains");
    for c in 1..=4u8 {
        if best_mask >> (c - 1) & 1 == 1 {
            continue;
        }
        color[v] = c;
        if dsatur(neighbors, color, remaining - 1) {
            return true;
        }
    }
    color[v] = 0;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn k4_needs_all_four_colors() {
        let c = four_color(&families::complete(4)).unwrap();
        assert_eq!(c.colors_used(), 4);
        assert!(c.classes().iter().all(|class| class.len() == 1));
    }

    #[test]
    fn odd_cycle_uses_three_colors() {
        let g = families::cycle(5);
        let c = four_color(&g).unwrap();
        assert!(is_proper_coloring(&g, &c));
        assert_eq!(c.colors_used(), 3);
    }

    #[test]
    fn grid_gets_two_colors() {
        let g = families::grid(6, 6);
        let c = four_color(&g).unwrap();
        assert!(is_proper_coloring(&g, &c));
        assert_eq!(c.colors_used(), 2);
    }

    #[test]
    fn nonplanar_and_loopy_inputs_are_rejected() {
        assert_eq!(four_color(&families::complete(5)), Err(Error::NotPlanar));
        let g = Multigraph::new_allow_loops(2, vec![(0, 1), (1, 1)]).unwrap();
        assert!(matches!(four_color(&g), Err(Error::Loop { .. })));
    }

    #[test]
    fn coloring_is_deterministic() {
        let g = families::grid(4, 5);
        assert_eq!(four_color(&g).unwrap(), four_color(&g).unwrap());
    }
}
