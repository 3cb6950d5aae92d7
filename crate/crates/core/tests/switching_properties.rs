mod common;

use cutpoly::audit::find_gaps;
use cutpoly::graph::{cut_vector, enumerate_cuts, families, Cut, Multigraph};
use cutpoly::lattice::{DilatedPoint, EdgeVector};
use cutpoly::polytope::CutPolytope;
use cutpoly::switching::SwitchMap;
use cutpoly::Limits;
use proptest::prelude::*;

fn graphs_up_to(n: usize) -> Vec<Multigraph> {
    let mut out: Vec<Multigraph> = (1..=n).flat_map(families::isomorphism_classes).collect();
    out.extend(common::multigraph_examples());
    out
}

#[test]
fn set_formula_matches_symmetric_difference() {
    for g in graphs_up_to(6) {
        let cuts = enumerate_cuts(&g, &Limits::default()).unwrap();
        for base in &cuts {
            let s = SwitchMap::new(&g, base.clone());
            for c in &cuts {
                let image = s.switch_cut(c);
                assert_eq!(image, common::switch_by_intersections(base, c));
                assert_eq!(
                    cut_vector(&g, &image),
                    s.switch_point(&DilatedPoint::new(cut_vector(&g, c), 1)).vector
                );
            }
        }
    }
}

#[test]
fn switching_is_additive_over_decompositions() {
    for g in graphs_up_to(5) {
        let cuts = enumerate_cuts(&g, &Limits::default()).unwrap();
        let m = g.edge_count();
        for base in &cuts {
            let s = SwitchMap::new(&g, base.clone());
            for k in 1..=3usize {
                for_each_multiset(cuts.len(), k, &mut |idx| {
                    let parts: Vec<&Cut> = idx.iter().map(|&i| &cuts[i]).collect();
                    let p = EdgeVector::sum(m, parts.iter().map(|c| cut_vector(&g, c)).collect::<Vec<_>>().iter());
                    let images: Vec<EdgeVector> = parts.iter().map(|c| cut_vector(&g, &s.switch_cut(c))).collect();
                    assert_eq!(
                        s.switch_point(&DilatedPoint::new(p, k as u32)).vector,
                        EdgeVector::sum(m, &images)
                    );
                });
            }
        }
    }
}

fn for_each_multiset(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(n: usize, k: usize, start: usize, acc: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if acc.len() == k {
            f(acc);
            return;
        }
        for i in start..n {
            acc.push(i);
            go(n, k, i, acc, f);
            acc.pop();
        }
    }
    go(n, k, 0, &mut Vec::new(), f);
}

#[test]
fn gaps_are_permuted_by_switchings() {
    let l = Limits::default();
    for g in [families::complete(5), families::complete(4), families::cycle(5)] {
        let poly = CutPolytope::new(&g, &l).unwrap();
        let k_max = if g.vertex_count() == 5 && g.edge_count() == 10 { 4 } else { 3 };
        let gaps = find_gaps(&poly, k_max, &l).unwrap().gaps;
        let mut sorted = gaps.clone();
        sorted.sort();
        for base in poly.cuts() {
            let s = SwitchMap::new(&g, base.clone());
            let mut image: Vec<DilatedPoint> = gaps.iter().map(|p| s.switch_point(p)).collect();
            image.sort();
            assert_eq!(image, sorted);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn switching_preserves_membership(
        seed in 0u64..10_000,
        n in 2usize..7,
        k in 1u32..4,
        base in 0u64..64,
    ) {
        use rand::Rng;
        let mut r = common::rng(seed);
        let g = common::random_planar(&mut r, n, 0.8, 1);
        let poly = CutPolytope::new(&g, &Limits::default()).unwrap();
        let s = SwitchMap::new(&g, Cut::from_index(n, base % (1 << (n - 1))));
        let x = EdgeVector((0..g.edge_count()).map(|_| r.gen_range(0..=i64::from(k))).collect());
        let p = DilatedPoint::new(x, k);
        prop_assert_eq!(poly.in_dilation(&p).unwrap(), poly.in_dilation(&s.switch_point(&p)).unwrap());
        prop_assert_eq!(s.switch_point(&s.switch_point(&p)), p);
    }
}
