//! Switchings: the involutions `φ_{A|B}` of the cut polytope.
//!
//! On points, `φ_{A|B}` replaces `x_e` by `k − x_e` for every edge `e`
//! crossing `A|B` (at dilation level `k`). On cuts it sends `C|D` to the cut
//! whose side is the symmetric difference of `A` and `C`.

use crate::error::Result;
use crate::graph::{cut_vector, enumerate_cuts, Cut, Multigraph};
use crate::lattice::{DilatedPoint, EdgeVector};
use crate::limits::Limits;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchMap {
    base_cut: Cut,
    crossing: Vec<bool>,
}

impl SwitchMap {
    pub fn new(g: &Multigraph, base_cut: Cut) -> Self {
        assert_eq!(
            base_cut.vertex_count(),
            g.vertex_count(),
            "cut and graph have different vertex sets"
        );
        let crossing = cut_vector(g, &base_cut).iter().map(|&v| v == 1).collect();
        SwitchMap { base_cut, crossing }
    }

    pub fn base_cut(&self) -> &Cut {
        &self.base_cut
    }

    /// Edge ids crossing the base cut, ascending.
    pub fn crossing_set(&self) -> Vec<usize> {
        (0..self.crossing.len()).filter(|&e| self.crossing[e]).collect()
    }

    pub fn switch_cut(&self, c: &Cut) -> Cut {
        assert_eq!(
            c.vertex_count(),
            self.base_cut.vertex_count(),
            "cuts over different vertex sets"
        );
        self.base_cut.symmetric_difference(c)
    }

    pub fn switch_vector(&self, x: &EdgeVector, k: u32) -> EdgeVector {
        assert_eq!(x.len(), self.crossing.len(), "vector length differs from edge count");
        let k = i64::from(k);
        EdgeVector(
            x.iter()
                .zip(&self.crossing)
                .map(|(&v, &c)| if c { k - v } else { v })
                .collect(),
        )
    }

    pub fn switch_point(&self, p: &DilatedPoint) -> DilatedPoint {
        DilatedPoint::new(self.switch_vector(&p.vector, p.level), p.level)
    }
}

/// Whether every switching permutes the cuts and sends the empty cut to its
/// base cut. Checked on cut vectors, so parallel and isolated parts count.
pub fn verify_transitivity(g: &Multigraph, limits: &Limits) -> Result<bool> {
    let cuts = enumerate_cuts(g, limits)?;
    let empty = Cut::empty(g.vertex_count());
    for base in &cuts {
        let s = SwitchMap::new(g, base.clone());
        if s.switch_cut(&empty) != *base {
            return Ok(false);
        }
        let mut seen = vec![false; cuts.len()];
        for c in &cuts {
            let image = s.switch_cut(c);
            let vector_image = s.switch_vector(&cut_vector(g, c), 1);
            if cut_vector(g, &image) != vector_image {
                return Ok(false);
            }
            let Some(i) = image.index() else { return Ok(false) };
            let slot = &mut seen[i as usize];
            if *slot {
                return Ok(false);
            }
            *slot = true;
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    fn k3_map() -> (Multigraph, SwitchMap) {
        let g = families::complete(3);
        let s = SwitchMap::new(&g, Cut::from_side(3, [1]));
        (g, s)
    }

    #[test]
    fn triangle_examples() {
        let (_, s) = k3_map();
        assert_eq!(s.crossing_set(), vec![0, 2]);
        let image = s.switch_cut(&Cut::from_side(3, [2]));
        assert_eq!(image, Cut::from_side(3, [1, 2]));
        assert_eq!(s.switch_cut(&Cut::empty(3)), *s.base_cut());
        assert!(s.switch_cut(s.base_cut()).is_empty());
    }

    #[test]
    fn point_examples() {
        let (_, s) = k3_map();
        let p = DilatedPoint::new(EdgeVector(vec![2, 2, 2]), 3);
        let q = s.switch_point(&p);
        assert_eq!(q, DilatedPoint::new(EdgeVector(vec![1, 2, 1]), 3));
        assert_eq!(s.switch_point(&q), p);
        let zero = DilatedPoint::new(EdgeVector::zeros(3), 4);
        assert_eq!(s.switch_point(&zero).vector, EdgeVector(vec![4, 0, 4]));
    }

    #[test]
    fn transitivity_on_small_graphs() {
        let l = Limits::default();
        assert!(verify_transitivity(&families::complete(3), &l).unwrap());
        assert!(verify_transitivity(&families::complete(5), &l).unwrap());
        assert!(verify_transitivity(&Multigraph::edgeless(4), &l).unwrap());
    }
}
