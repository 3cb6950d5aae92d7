//! Constructive decomposition of lattice points of `k·Cut(G)`, `k ≤ 3`, for
//! planar loopless multigraphs, and four-colorings from decompositions of
//! the all-two vector.
//!
//! The reduction is the same for `k = 2` and `k = 3`: contract the edges
//! where the point vanishes, switch away the entries equal to `k`, and solve
//! the residual case directly. For `k = 3` the residual has entries in
//! `{1, 2}`; the ones form a cut `A|B`, and switching by `A|B` turns the
//! point into the all-two vector, which splits into the three balanced cuts
//! of a four-coloring. For `k = 2` the residual is the all-ones vector, the
//! crossing set of a bipartition.

use crate::error::{Error, Result};
use crate::graph::{
    contract_edges, cut_vector, four_color, is_planar, is_proper_coloring,
    recover_cut_from_edgeset, Coloring4, Cut, Multigraph,
};
use crate::lattice::{DilatedPoint, EdgeVector};
use crate::limits::Limits;
use crate::polytope::CutPolytope;
use crate::switching::SwitchMap;

/// The cut whose vector is `p`.
pub fn decompose1(g: &Multigraph, p: &EdgeVector) -> Result<Cut> {
    check_len(g, p)?;
    if p.iter().any(|&v| v != 0 && v != 1) {
        return Err(Error::NotInDilation { k: 1 });
    }
    recover_cut_from_edgeset(g, &p.support()).ok_or(Error::NotInLattice)
}

/// Two cuts summing to `p`, a lattice point of `2·Cut(G)`.
pub fn decompose2_planar(g: &Multigraph, p: &EdgeVector, limits: &Limits) -> Result<Vec<Cut>> {
    check_planar_member(g, p, 2, limits)?;
    by_components(g, p, 2)
}

/// Three cuts summing to `p`, a lattice point of `3·Cut(G)`.
pub fn decompose3_planar(g: &Multigraph, p: &EdgeVector, limits: &Limits) -> Result<Vec<Cut>> {
    check_planar_member(g, p, 3, limits)?;
    by_components(g, p, 3)
}

/// Dispatches to the decomposition for level `k ∈ {1, 2, 3}`.
pub fn decompose_planar(g: &Multigraph, p: &EdgeVector, k: u32, limits: &Limits) -> Result<Vec<Cut>> {
    match k {
        1 => {
            check_planar_member(g, p, 1, limits)?;
            decompose1(g, p).map(|c| vec![c])
        }
        2 => decompose2_planar(g, p, limits),
        3 => decompose3_planar(g, p, limits),
        _ => Err(Error::InvalidInput(format!(
            "planar decomposition is available for k = 1, 2, 3, not {k}"
        ))),
    }
}

fn check_len(g: &Multigraph, p: &EdgeVector) -> Result<()> {
    if p.len() != g.edge_count() {
        return Err(Error::DimensionMismatch {
            expected: g.edge_count(),
            got: p.len(),
        });
    }
    Ok(())
}

fn check_planar_member(g: &Multigraph, p: &EdgeVector, k: u32, limits: &Limits) -> Result<()> {
    check_len(g, p)?;
    if let Some(e) = (0..g.edge_count()).find(|&e| {
        let (u, v) = g.endpoints(e);
        u == v
    }) {
        return Err(Error::Loop {
            edge: e,
            vertex: g.endpoints(e).0,
        });
    }
    if is_planar(g).is_none() {
        return Err(Error::NotPlanar);
    }
    let poly = CutPolytope::new(g, limits)?;
    if !poly.in_lattice(p) {
        return Err(Error::NotInLattice);
    }
    if !poly.in_dilation(&DilatedPoint::new(p.clone(), k))? {
        return Err(Error::NotInDilation { k });
    }
    Ok(())
}

/// Decomposes each connected component separately and merges the sides.
fn by_components(g: &Multigraph, p: &EdgeVector, k: u32) -> Result<Vec<Cut>> {
    let (count, comp) = g.components();
    let n = g.vertex_count();
    let mut sides: Vec<Vec<bool>> = vec![vec![false; n]; k as usize];
    for c in 0..count {
        let vertices: Vec<usize> = (0..n).filter(|&v| comp[v] == c).collect();
        let (sub, edge_ids) = g.induced(&vertices);
        let q = EdgeVector(edge_ids.iter().map(|&e| p[e]).collect());
        let cuts = reduce(&sub, &q, k)?;
        for (side, cut) in sides.iter_mut().zip(&cuts) {
            for (local, &v) in vertices.iter().enumerate() {
                side[v] = cut.contains(local);
            }
        }
    }
    let cuts: Vec<Cut> = sides.into_iter().map(Cut::from_membership).collect();
    assert_sums_to(g, &cuts, p);
    Ok(cuts)
}

fn assert_sums_to(g: &Multigraph, cuts: &[Cut], p: &EdgeVector) {
    let vectors: Vec<EdgeVector> = cuts.iter().map(|c| cut_vector(g, c)).collect();
    assert_eq!(
        &EdgeVector::sum(g.edge_count(), &vectors),
        p,
        "decomposition does not sum to the point"
    );
}

/// `(edge count, entries equal to k)`; strictly decreases on every step.
fn measure(g: &Multigraph, p: &EdgeVector, k: u32) -> (usize, usize) {
    (g.edge_count(), p.positions_of(i64::from(k)).len())
}

fn reduce(g: &Multigraph, p: &EdgeVector, k: u32) -> Result<Vec<Cut>> {
    let zeros = p.positions_of(0);
    if !zeros.is_empty() {
        let c = contract_edges(g, &zeros);
        if !c.loops_created.is_empty() {
            return Err(Error::Precondition(format!(
                "contracting the zero edges creates loops {:?}: the point is not a lattice point of the dilation",
                c.loops_created
            )));
        }
        let mut q = EdgeVector::zeros(c.contracted.edge_count());
        for (e, image) in c.edge_map.iter().enumerate() {
            if let Some(f) = *image {
                q[f] = p[e];
            }
        }
        assert!(measure(&c.contracted, &q, k) < measure(g, p, k));
        let cuts = reduce(&c.contracted, &q, k)?;
        return Ok(cuts
            .iter()
            .map(|cut| crate::graph::lift_cut(cut, &c.vertex_map))
            .collect());
    }

    let full = p.positions_of(i64::from(k));
    if let Some(&e) = full.first() {
        let (u, v) = g.endpoints(e);
        let star = Cut::from_side(g.vertex_count(), [u.min(v)]);
        let s = SwitchMap::new(g, star);
        let q = s.switch_vector(p, k);
        assert!(measure(g, &q, k) < measure(g, p, k));
        let cuts = reduce(g, &q, k)?;
        return Ok(cuts.iter().map(|c| s.switch_cut(c)).collect());
    }

    let cuts = match k {
        2 => {
            // every entry is one: the crossing set of a bipartition
            let all: Vec<usize> = (0..g.edge_count()).collect();
            let bipartition = recover_cut_from_edgeset(g, &all).ok_or_else(|| {
                Error::Precondition(
                    "the all-ones residual is not a cut: the point is not a lattice point".into(),
                )
            })?;
            vec![bipartition, Cut::empty(g.vertex_count())]
        }
        3 => {
            let ones = p.positions_of(1);
            let base = recover_cut_from_edgeset(g, &ones).ok_or_else(|| {
                Error::Precondition(
                    "the edges of value one do not form a cut: the point is not a lattice point"
                        .into(),
                )
            })?;
            debug_assert!(dual_parity_holds(g, &ones));
            let coloring = four_color(g)?;
            let s = SwitchMap::new(g, base);
            balanced_three_cuts(g, &coloring)?
                .iter()
                .map(|c| s.switch_cut(c))
                .collect()
        }
        _ => unreachable!("reduction runs for k = 2, 3"),
    };
    assert_sums_to(g, &cuts, p);
    Ok(cuts)
}

/// A cut of a connected plane graph is an even subgraph of its dual.
fn dual_parity_holds(g: &Multigraph, edges: &[usize]) -> bool {
    if g.vertex_count() == 0 || !g.is_connected() {
        return true;
    }
    let Some(emb) = is_planar(g) else { return false };
    let Ok(dm) = crate::graph::dual_graph(g, &emb) else { return false };
    let mapped: Vec<usize> = edges.iter().map(|&e| dm.edge_bijection[e]).collect();
    crate::graph::is_even_subgraph(&dm.dual, &mapped)
}

/// The cuts `V₁∪V₂ | V₃∪V₄`, `V₁∪V₃ | V₂∪V₄` and `V₁∪V₄ | V₂∪V₃` of a proper
/// four-coloring. Every edge joins two classes and so crosses exactly two of
/// them.
pub fn balanced_three_cuts(g: &Multigraph, coloring: &Coloring4) -> Result<Vec<Cut>> {
    if coloring.color.len() != g.vertex_count() || !is_proper_coloring(g, coloring) {
        return Err(Error::InvalidInput("coloring is not proper".into()));
    }
    let cuts: Vec<Cut> = [2u8, 3, 4]
        .iter()
        .map(|&partner| {
            Cut::from_membership(
                coloring
                    .color
                    .iter()
                    .map(|&c| c == 1 || c == partner)
                    .collect(),
            )
        })
        .collect();
    assert_sums_to(g, &cuts, &EdgeVector::filled(g.edge_count(), 2));
    Ok(cuts)
}

/// Colors each vertex by its sides in the first two cuts. The three cuts
/// must cross every edge exactly twice, so every edge crosses the first or
/// the second and its endpoints get different colors.
pub fn four_coloring_from_decomposition(g: &Multigraph, cuts: &[Cut]) -> Result<Coloring4> {
    if cuts.len() != 3 {
        return Err(Error::InvalidInput(format!("expected 3 cuts, got {}", cuts.len())));
    }
    if cuts.iter().any(|c| c.vertex_count() != g.vertex_count()) {
        return Err(Error::InvalidInput("cut and graph have different vertex sets".into()));
    }
    let vectors: Vec<EdgeVector> = cuts.iter().map(|c| cut_vector(g, c)).collect();
    if EdgeVector::sum(g.edge_count(), &vectors) != EdgeVector::filled(g.edge_count(), 2) {
        return Err(Error::Precondition(
            "the cuts do not sum to the all-two vector".into(),
        ));
    }
    let coloring = Coloring4 {
        color: (0..g.vertex_count())
            .map(|v| 1 + 2 * u8::from(cuts[0].contains(v)) + u8::from(cuts[1].contains(v)))
            .collect(),
    };
    assert!(is_proper_coloring(g, &coloring), "derived coloring is not proper");
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    fn l() -> Limits {
        Limits::default()
    }

    fn sum(g: &Multigraph, cuts: &[Cut]) -> EdgeVector {
        let v: Vec<EdgeVector> = cuts.iter().map(|c| cut_vector(g, c)).collect();
        EdgeVector::sum(g.edge_count(), &v)
    }

    #[test]
    fn triangle_level_three() {
        let g = families::complete(3);
        let cuts = decompose3_planar(&g, &EdgeVector(vec![2, 2, 2]), &l()).unwrap();
        let mut sorted = cuts.clone();
        sorted.sort();
        assert_eq!(
            sorted,
            vec![Cut::from_side(3, [1]), Cut::from_side(3, [2]), Cut::from_side(3, [1, 2])]
        );
        let cuts = decompose3_planar(&g, &EdgeVector(vec![3, 3, 0]), &l()).unwrap();
        assert_eq!(cuts, vec![Cut::from_side(3, [0]); 3]);
    }

    #[test]
    fn k4_generated_point() {
        let g = families::complete(4);
        let gen = [Cut::from_side(4, [1]), Cut::from_side(4, [2]), Cut::from_side(4, [1, 2])];
        let p = sum(&g, &gen);
        let cuts = decompose3_planar(&g, &p, &l()).unwrap();
        assert_eq!(sum(&g, &cuts), p);
    }

    #[test]
    fn square_level_two() {
        let g = families::cycle(4);
        let cuts = decompose2_planar(&g, &EdgeVector(vec![1, 1, 1, 1]), &l()).unwrap();
        assert_eq!(cuts, vec![Cut::from_side(4, [1, 3]), Cut::empty(4)]);
        let cuts = decompose2_planar(&g, &EdgeVector(vec![2, 0, 2, 0]), &l()).unwrap();
        assert_eq!(cuts, vec![Cut::from_side(4, [1, 2]); 2]);
    }

    #[test]
    fn level_one() {
        assert_eq!(
            decompose1(&families::complete(3), &EdgeVector(vec![1, 1, 0])).unwrap(),
            Cut::from_side(3, [0])
        );
        assert_eq!(decompose1(&families::complete(3), &EdgeVector::zeros(3)).unwrap(), Cut::empty(3));
        assert_eq!(
            decompose1(&families::complete(4), &EdgeVector(vec![1, 1, 1, 0, 0, 0])).unwrap(),
            Cut::from_side(4, [0])
        );
        assert!(matches!(
            decompose1(&families::complete(3), &EdgeVector(vec![1, 1, 1])),
            Err(Error::NotInLattice)
        ));
    }

    #[test]
    fn precondition_failures() {
        let k3 = families::complete(3);
        assert!(matches!(
            decompose3_planar(&k3, &EdgeVector(vec![1, 1, 1]), &l()),
            Err(Error::NotInLattice)
        ));
        assert!(matches!(
            decompose2_planar(&k3, &EdgeVector(vec![2, 2, 2]), &l()),
            Err(Error::NotInDilation { k: 2 })
        ));
        assert!(matches!(
            decompose3_planar(&families::complete(5), &EdgeVector::filled(10, 2), &l()),
            Err(Error::NotPlanar)
        ));
        assert!(decompose3_planar(&k3, &EdgeVector(vec![2, 2]), &l()).is_err());
    }

    #[test]
    fn disconnected_graphs_decompose_componentwise() {
        let g = Multigraph::new(6, vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5)]).unwrap();
        let p = EdgeVector(vec![2, 2, 2, 3, 1]);
        let cuts = decompose3_planar(&g, &p, &l()).unwrap();
        assert_eq!(sum(&g, &cuts), p);
    }

    #[test]
    fn balanced_cuts_and_back() {
        let g = families::complete(4);
        let coloring = Coloring4 { color: vec![1, 2, 3, 4] };
        let cuts = balanced_three_cuts(&g, &coloring).unwrap();
        assert_eq!(sum(&g, &cuts), EdgeVector::filled(6, 2));
        let back = four_coloring_from_decomposition(&g, &cuts).unwrap();
        assert_eq!(back.colors_used(), 4);

        let c4 = families::cycle(4);
        let bip = Cut::from_side(4, [1, 3]);
        let cuts = vec![bip.clone(), bip, Cut::empty(4)];
        let two = four_coloring_from_decomposition(&c4, &cuts).unwrap();
        assert_eq!(two.colors_used(), 2);

        let edgeless = Multigraph::edgeless(3);
        let cuts = balanced_three_cuts(&edgeless, &Coloring4 { color: vec![1, 1, 1] }).unwrap();
        assert_eq!(cuts.len(), 3);
        assert!(balanced_three_cuts(&g, &Coloring4 { color: vec![1, 1, 2, 3] }).is_err());
    }
}
