mod common;

use cutpoly::graph::families;
use cutpoly::lattice::simplex::feasible;
use cutpoly::lattice::{
    in_cut_lattice, in_dilation, lattice_description, lp_member_convex, DilatedPoint, EdgeVector,
};
use cutpoly::Limits;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Unique solution of the square-or-tall system `cols · λ = rhs`, if the
/// columns are independent and the system is consistent.
fn solve_independent(cols: &[Vec<BigRational>], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = rhs.len();
    let k = cols.len();
    let mut a: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| {
            let mut r: Vec<BigRational> = cols.iter().map(|c| c[i].clone()).collect();
            r.push(rhs[i].clone());
            r
        })
        .collect();
    let mut r = 0;
    for c in 0..k {
        let p = (r..rows).find(|&i| !a[i][c].is_zero())?;
        a.swap(r, p);
        let pivot = a[r][c].clone();
        for x in a[r].iter_mut() {
            *x = &*x / &pivot;
        }
        let pr = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pr) {
                    *x = &*x - &f * y;
                }
            }
        }
        r += 1;
    }
    if a[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    Some((0..k).map(|i| a[i][k].clone()).collect())
}

/// Carathéodory: a point of the hull lies in the hull of some affinely
/// independent subset, where its barycentric coordinates are unique.
fn caratheodory_member(gens: &[Vec<i64>], target: &[BigRational]) -> bool {
    let d = target.len();
    let mut rhs = target.to_vec();
    rhs.push(q(1, 1));
    for mask in 1u32..1 << gens.len() {
        if mask.count_ones() as usize > d + 1 {
            continue;
        }
        let cols: Vec<Vec<BigRational>> = (0..gens.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| {
                let mut c: Vec<BigRational> = gens[i].iter().map(|&x| q(x, 1)).collect();
                c.push(q(1, 1));
                c
            })
            .collect();
        if let Some(lambda) = solve_independent(&cols, &rhs) {
            if lambda.iter().all(|l| !l.is_negative()) {
                return true;
            }
        }
    }
    false
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn convex_membership_matches_caratheodory(
        gens in prop::collection::vec(prop::collection::vec(-3i64..=3, 1..=4), 1..=8),
        numer in prop::collection::vec(-12i64..=12, 4),
        denom in 1i64..=4,
    ) {
        let d = gens[0].len();
        let gens: Vec<Vec<i64>> = gens.into_iter().map(|mut g| { g.resize(d, 0); g }).collect();
        let target: Vec<BigRational> = numer[..d].iter().map(|&x| q(x, denom)).collect();
        let evs: Vec<EdgeVector> = gens.iter().map(|g| EdgeVector(g.clone())).collect();
        prop_assert_eq!(lp_member_convex(&evs, &target), caratheodory_member(&gens, &target));
    }

    #[test]
    fn hull_points_are_members(
        gens in prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 1..=8),
        weights in prop::collection::vec(0i64..=3, 8),
    ) {
        let w = &weights[..gens.len()];
        let total: i64 = w.iter().sum::<i64>().max(1);
        let w: Vec<i64> = if w.iter().all(|&x| x == 0) { let mut v = vec![0; gens.len()]; v[0] = 1; v } else { w.to_vec() };
        let target: Vec<BigRational> = (0..3)
            .map(|j| q(gens.iter().zip(&w).map(|(g, &x)| g[j] * x).sum(), total.max(w.iter().sum())))
            .collect();
        let evs: Vec<EdgeVector> = gens.iter().map(|g| EdgeVector(g.clone())).collect();
        prop_assert!(lp_member_convex(&evs, &target));
    }

    #[test]
    fn simplex_terminates_on_degenerate_systems(
        a in prop::collection::vec(prop::collection::vec(-2i64..=2, 6), 1..=5),
        b in prop::collection::vec(-1i64..=1, 5),
    ) {
        let rows: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let rhs: Vec<BigInt> = b[..rows.len()].iter().map(|&x| BigInt::from(x)).collect();
        // debug builds assert the pivot bound inside
        let _ = feasible(&rows, &rhs);
    }

    #[test]
    fn parity_rule_agrees_with_hnf_on_random_vectors(seed in 0u64..10_000, n in 2usize..7) {
        let mut r = common::rng(seed);
        let g = common::random_planar(&mut r, n, 0.8, 2);
        let ld = lattice_description(&g, &Limits::default()).unwrap();
        use rand::Rng;
        for _ in 0..50 {
            let x = EdgeVector((0..g.edge_count()).map(|_| r.gen_range(-4..=4)).collect());
            prop_assert_eq!(in_cut_lattice(&ld, &x), ld.hnf_contains(&x));
        }
    }
}

#[test]
fn membership_is_monotone_under_scaling() {
    let l = Limits::default();
    for g in [families::complete(3), families::cycle(4), families::complete(4)] {
        let ld = lattice_description(&g, &l).unwrap();
        for k in 1..=2u32 {
            for x in common::box_vectors(g.edge_count(), i64::from(k)) {
                let p = DilatedPoint::new(x, k);
                if in_dilation(&g, &ld, &p, &l).unwrap() {
                    for c in [2, 3] {
                        assert!(in_dilation(&g, &ld, &p.scaled(c), &l).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn lattice_index_is_two_to_the_cycle_rank() {
    for g in (1..=5).flat_map(families::connected_classes) {
        let ld = lattice_description(&g, &Limits::default()).unwrap();
        let rank = g.edge_count() + 1 - g.vertex_count();
        assert_eq!(ld.index(), BigInt::from(1u64 << rank));
    }
}

