mod common;

use cutpoly::audit::enumerate_lattice_points;
use cutpoly::decompose::{decompose3_planar, decompose_planar};
use cutpoly::graph::{cut_vector, Cut, Multigraph};
use cutpoly::lattice::{DilatedPoint, EdgeVector};
use cutpoly::polytope::CutPolytope;
use cutpoly::switching::SwitchMap;
use cutpoly::{Error, Limits};
use proptest::prelude::*;
use rand::Rng;

fn sum(g: &Multigraph, cuts: &[Cut]) -> EdgeVector {
    let v: Vec<EdgeVector> = cuts.iter().map(|c| cut_vector(g, c)).collect();
    EdgeVector::sum(g.edge_count(), &v)
}

#[test]
fn small_multigraphs_decompose_completely() {
    let l = Limits::default();
    for g in common::multigraph_examples() {
        let poly = CutPolytope::new(&g, &l).unwrap();
        for k in 1..=3 {
            for x in enumerate_lattice_points(&poly, k, &l).unwrap() {
                let cuts = decompose_planar(&g, &x, k, &l).unwrap();
                assert_eq!(cuts.len(), k as usize);
                assert_eq!(sum(&g, &cuts), x);
            }
        }
    }
}

#[test]
fn random_sums_of_cuts_round_trip() {
    let l = Limits::default();
    let mut r = common::rng(2024);
    for _ in 0..100 {
        let n = r.gen_range(1..=8);
        let g = common::random_planar(&mut r, n, 0.75, 2);
        let k = r.gen_range(1..=3u32);
        let chosen: Vec<Cut> = (0..k)
            .map(|_| Cut::from_index(n, r.gen_range(0..1u64 << (n - 1))))
            .collect();
        let p = sum(&g, &chosen);
        let cuts = decompose_planar(&g, &p, k, &l).unwrap();
        assert_eq!(cuts.len(), k as usize);
        assert_eq!(sum(&g, &cuts), p);
    }
}

#[test]
fn points_outside_the_dilation_are_rejected() {
    let l = Limits::default();
    let g = Multigraph::new(4, vec![(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
    // odd triangle sum
    assert!(matches!(
        decompose3_planar(&g, &EdgeVector(vec![1, 1, 1, 0]), &l),
        Err(Error::NotInLattice)
    ));
    // in the lattice, but violates a triangle inequality at level 3
    assert!(matches!(
        decompose3_planar(&g, &EdgeVector(vec![3, 3, 2, 0]), &l),
        Err(Error::NotInDilation { k: 3 })
    ));
    assert!(decompose_planar(&g, &EdgeVector(vec![0, 0, 0, 0]), 4, &l).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn switching_transfers_decompositions(seed in 0u64..10_000, n in 2usize..8, base in 0u64..64) {
        let l = Limits::default();
        let mut r = common::rng(seed);
        let g = common::random_planar(&mut r, n, 0.8, 1);
        let chosen: Vec<Cut> = (0..3)
            .map(|_| Cut::from_index(n, r.gen_range(0..1u64 << (n - 1))))
            .collect();
        let p = sum(&g, &chosen);
        let s = SwitchMap::new(&g, Cut::from_index(n, base % (1 << (n - 1))));
        let q = s.switch_point(&DilatedPoint::new(p.clone(), 3)).vector;
        let cuts = decompose3_planar(&g, &q, &l).unwrap();
        let back: Vec<Cut> = cuts.iter().map(|c| s.switch_cut(c)).collect();
        prop_assert_eq!(sum(&g, &back), p);
    }

    #[test]
    fn disconnected_planar_graphs_decompose(seed in 0u64..10_000) {
        let l = Limits::default();
        let mut r = common::rng(seed);
        let a = common::random_planar(&mut r, 4, 0.9, 1);
        let b = common::random_planar(&mut r, 3, 0.9, 1);
        let mut edges = a.edges().to_vec();
        edges.extend(b.edges().iter().map(|&(u, v)| (u + 4, v + 4)));
        let g = Multigraph::new(7, edges).unwrap();
        let chosen: Vec<Cut> = (0..3).map(|_| Cut::from_index(7, r.gen_range(0..64))).collect();
        let p = sum(&g, &chosen);
        let cuts = decompose3_planar(&g, &p, &l).unwrap();
        prop_assert_eq!(sum(&g, &cuts), p);
    }
}
