//! Hilbert bases of pointed rational cones relative to a lattice.
//!
//! The cone is first rewritten in coordinates of a basis of `L ∩ span`, so
//! that it becomes full-dimensional in `Z^r`. A placing triangulation splits
//! it into simplicial cones; every Hilbert basis element is a generator or a
//! lattice point of the half-open fundamental parallelepiped of one of those
//! simplicial cones. The union of these candidates is then reduced.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::hnf::{self, IntMatrix};
use crate::lattice::EdgeVector;
use crate::limits::{self, Limits};

/// Cap on the total number of parallelepiped points visited.
const PARALLELEPIPED_POINTS: u128 = 20_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertBasisReport {
    /// Sorted lexicographically.
    pub basis: Vec<EdgeVector>,
    /// Whether every basis element is one of the generators.
    pub is_subset_of_cuts: bool,
    /// Basis elements that are not generators.
    pub offending: Vec<EdgeVector>,
}

/// Minimal generating set of the monoid `cone(generators) ∩ lattice`, where
/// `lattice` is given by a row basis. The cone must be pointed and the
/// generators must lie in the lattice.
pub fn hilbert_basis(
    generators: &[EdgeVector],
    lattice: &IntMatrix,
    limits: &Limits,
) -> Result<HilbertBasisReport> {
    let m = generators.first().map_or(0, EdgeVector::len);
    for g in generators {
        if g.len() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                got: g.len(),
            });
        }
    }
    if let Some(row) = lattice.iter().find(|row| row.len() != m) {
        return Err(Error::DimensionMismatch {
            expected: m,
            got: row.len(),
        });
    }
    let mut gens: Vec<EdgeVector> = Vec::new();
    for g in generators {
        if !g.is_zero() && !gens.contains(g) {
            gens.push(g.clone());
        }
    }
    if gens.is_empty() {
        return Ok(HilbertBasisReport {
            basis: Vec::new(),
            is_subset_of_cuts: true,
            offending: Vec::new(),
        });
    }
    limits::check(
        "Hilbert basis generators",
        gens.len() as u128,
        limits.hilbert_generators as u128,
    )?;

    let frame = Frame::new(&gens, lattice)?;
    limits::check(
        "Hilbert basis dimension",
        frame.rank() as u128,
        limits.hilbert_dimension as u128,
    )?;
    let coords: Vec<Vec<BigInt>> = gens
        .iter()
        .map(|g| {
            frame
                .coordinates(g)
                .ok_or_else(|| Error::InvalidInput(format!("generator {g} is not in the lattice")))
        })
        .collect::<Result<_>>()?;

    let (simplices, facet_normals) = triangulate(&coords);
    let grading = facet_normals.iter().fold(vec![BigInt::zero(); frame.rank()], |acc, n| {
        acc.iter().zip(n).map(|(a, b)| a + b).collect()
    });
    if coords.iter().any(|c| !dot(&grading, c).is_positive()) {
        return Err(Error::InvalidInput("the cone contains a line".into()));
    }
    let grading = small_vec(&grading)?;
    let cones: Vec<Simplicial> = simplices
        .iter()
        .map(|s| Simplicial::new(&s.iter().map(|&i| coords[i].clone()).collect::<Vec<_>>()))
        .collect::<Result<_>>()?;
    let total: u128 = cones.iter().map(|c| c.det as u128).sum();
    limits::check("parallelepiped points", total, PARALLELEPIPED_POINTS)?;

    let mut candidates: BTreeSet<Vec<i64>> = coords.iter().map(|c| small_vec(c)).collect::<Result<_>>()?;
    let box_points: Vec<Vec<Vec<i64>>> = cones.par_iter().map(Simplicial::parallelepiped).collect::<Result<_>>()?;
    candidates.extend(box_points.into_iter().flatten());
    let mut candidates: Vec<(i64, Vec<i64>)> = candidates
        .into_iter()
        .map(|c| (dot_small(&grading, &c), c))
        .collect();
    candidates.sort();

    let contains = |x: &[i64]| cones.iter().any(|c| c.contains(x));
    let irreducible: Vec<Vec<i64>> = candidates
        .par_iter()
        .filter(|(deg, x)| {
            !candidates
                .iter()
                .take_while(|(d, _)| d < deg)
                .any(|(_, y)| contains(&sub(x, y)))
        })
        .map(|(_, x)| x.clone())
        .collect();

    let mut basis: Vec<EdgeVector> = irreducible
        .iter()
        .map(|c| frame.lift(c))
        .collect::<Result<_>>()?;
    basis.sort();
    let offending: Vec<EdgeVector> = basis.iter().filter(|b| !gens.contains(b)).cloned().collect();
    Ok(HilbertBasisReport {
        is_subset_of_cuts: offending.is_empty(),
        basis,
        offending,
    })
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn dot_small(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn small(x: &BigInt) -> Result<i64> {
    x.to_i64().ok_or(Error::ResourceLimit {
        what: "integer bits in Hilbert basis computation",
        actual: x.bits() as u128,
        limit: 63,
    })
}

fn small_vec(v: &[BigInt]) -> Result<Vec<i64>> {
    v.iter().map(small).collect()
}

fn transpose(rows: &[Vec<BigInt>], width: usize) -> IntMatrix {
    (0..width).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect()
}

/// A basis of `L ∩ span(generators)` in Hermite normal form.
struct Frame {
    basis: IntMatrix,
    pivots: Vec<usize>,
}

impl Frame {
    fn new(gens: &[EdgeVector], lattice: &IntMatrix) -> Result<Frame> {
        let m = gens[0].len();
        let rows: IntMatrix = gens
            .iter()
            .map(|g| g.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        // integer vectors orthogonal to every generator
        let normals = hnf::left_kernel(&transpose(&rows, m));
        let restricted = if normals.is_empty() {
            lattice.clone()
        } else {
            let pairing: IntMatrix = lattice
                .iter()
                .map(|b| normals.iter().map(|n| dot(b, n)).collect())
                .collect();
            hnf::left_kernel(&pairing)
                .iter()
                .map(|c| {
                    (0..m)
                        .map(|j| c.iter().zip(lattice).map(|(a, b)| a * &b[j]).sum())
                        .collect()
                })
                .collect()
        };
        let basis = hnf::hnf(&restricted);
        if basis.is_empty() {
            return Err(Error::InvalidInput("generators are not in the lattice".into()));
        }
        let pivots = hnf::pivots(&basis);
        Ok(Frame { basis, pivots })
    }

    fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Integer coefficients of `x` in the basis, if it lies in the lattice.
    fn coordinates(&self, x: &EdgeVector) -> Option<Vec<BigInt>> {
        let mut rest: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
        let mut out = Vec::with_capacity(self.rank());
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let (q, r) = rest[p].div_rem(&row[p]);
            if !r.is_zero() {
                return None;
            }
            for (t, s) in rest.iter_mut().zip(row) {
                *t -= &q * s;
            }
            out.push(q);
        }
        rest.iter().all(Zero::is_zero).then_some(out)
    }

    fn lift(&self, c: &[i64]) -> Result<EdgeVector> {
        let m = self.basis[0].len();
        (0..m)
            .map(|j| {
                let v: BigInt = c.iter().zip(&self.basis).map(|(&a, row)| BigInt::from(a) * &row[j]).sum();
                small(&v)
            })
            .collect::<Result<_>>()
            .map(EdgeVector)
    }
}

/// Primitive normal of the hyperplane through `facet`, positive on `opposite`.
fn facet_normal(rays: &[Vec<BigInt>], facet: &[usize], opposite: usize) -> Vec<BigInt> {
    let r = rays[0].len();
    let columns: IntMatrix = (0..r)
        .map(|i| facet.iter().map(|&j| rays[j][i].clone()).collect())
        .collect();
    let kernel = hnf::left_kernel(&columns);
    assert_eq!(kernel.len(), 1, "facet rays are not independent");
    let mut n = kernel.into_iter().next().unwrap();
    let g = n.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    for x in n.iter_mut() {
        *x = &*x / &g;
    }
    let side = dot(&n, &rays[opposite]);
    assert!(!side.is_zero(), "degenerate simplex");
    if side.is_negative() {
        for x in n.iter_mut() {
            *x = -&*x;
        }
    }
    n
}

/// Placing triangulation of the full-dimensional cone over `rays`, in
/// list order. Returns the simplices (sorted index lists) and the normals
/// of the final boundary facets.
fn triangulate(rays: &[Vec<BigInt>]) -> (Vec<Vec<usize>>, Vec<Vec<BigInt>>) {
    let r = rays[0].len();
    let mut initial = Vec::new();
    let mut echelon: IntMatrix = Vec::new();
    for (i, ray) in rays.iter().enumerate() {
        let mut trial = echelon.clone();
        trial.push(ray.clone());
        let h = hnf::hnf(&trial);
        if h.len() > echelon.len() {
            echelon = h;
            initial.push(i);
            if initial.len() == r {
                break;
            }
        }
    }
    assert_eq!(initial.len(), r, "rays do not span the ambient space");

    let mut boundary: BTreeMap<Vec<usize>, Vec<BigInt>> = BTreeMap::new();
    for &u in &initial {
        let facet: Vec<usize> = initial.iter().copied().filter(|&x| x != u).collect();
        let normal = facet_normal(rays, &facet, u);
        boundary.insert(facet, normal);
    }
    let mut simplices = vec![initial.clone()];
    for (v, ray) in rays.iter().enumerate() {
        if initial.contains(&v) {
            continue;
        }
        let visible: Vec<Vec<usize>> = boundary
            .iter()
            .filter(|(_, n)| dot(n, ray).is_negative())
            .map(|(f, _)| f.clone())
            .collect();
        for f in &visible {
            boundary.remove(f);
        }
        for f in visible {
            let mut s = f.clone();
            s.push(v);
            s.sort_unstable();
            simplices.push(s);
            for &w in &f {
                let mut facet: Vec<usize> = f.iter().copied().filter(|&x| x != w).collect();
                facet.push(v);
                facet.sort_unstable();
                if boundary.remove(&facet).is_none() {
                    let normal = facet_normal(rays, &facet, w);
                    boundary.insert(facet, normal);
                }
            }
        }
    }
    (simplices, boundary.into_values().collect())
}

/// A simplicial cone with rays `V` (rows), `|det V|` and `|det V| · V⁻¹`.
struct Simplicial {
    rays: Vec<Vec<i64>>,
    det: i64,
    scaled_inverse: Vec<Vec<i64>>,
    box_sizes: Vec<i64>,
}

impl Simplicial {
    fn new(rays: &[Vec<BigInt>]) -> Result<Self> {
        let r = rays.len();
        let h = hnf::hnf(rays);
        assert_eq!(h.len(), r, "simplex rays are dependent");
        let det = hnf::full_rank_index(&h);
        let box_sizes = (0..r).map(|i| small(&h[i][i])).collect::<Result<_>>()?;

        // Gauss-Jordan on [V | I]
        let mut a: Vec<Vec<BigRational>> = rays
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut out: Vec<BigRational> = row.iter().cloned().map(BigRational::from_integer).collect();
                out.extend((0..r).map(|j| BigRational::from_integer(BigInt::from(i32::from(i == j)))));
                out
            })
            .collect();
        for c in 0..r {
            let p = (c..r).find(|&i| !a[i][c].is_zero()).expect("nonsingular");
            a.swap(c, p);
            let pivot = a[c][c].clone();
            for x in a[c].iter_mut() {
                *x = &*x / &pivot;
            }
            let pivot_row = a[c].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i != c && !row[c].is_zero() {
                    let f = row[c].clone();
                    for (x, y) in row.iter_mut().zip(&pivot_row) {
                        *x = &*x - &f * y;
                    }
                }
            }
        }
        let det_q = BigRational::from_integer(det.clone());
        let scaled_inverse = a
            .iter()
            .map(|row| {
                row[r..]
                    .iter()
                    .map(|q| {
                        let v = q * &det_q;
                        assert!(v.is_integer(), "det · V⁻¹ is integral");
                        small(&v.to_integer())
                    })
                    .collect::<Result<Vec<i64>>>()
            })
            .collect::<Result<_>>()?;
        Ok(Simplicial {
            rays: rays.iter().map(|r| small_vec(r)).collect::<Result<_>>()?,
            det: small(&det)?,
            scaled_inverse,
            box_sizes,
        })
    }

    /// `det · λ` where `x = λ V`.
    fn coefficients(&self, x: &[i64]) -> Vec<i128> {
        let r = self.rays.len();
        (0..r)
            .map(|j| {
                x.iter()
                    .zip(&self.scaled_inverse)
                    .map(|(&xi, row)| i128::from(xi) * i128::from(row[j]))
                    .sum()
            })
            .collect()
    }

    fn contains(&self, x: &[i64]) -> bool {
        self.coefficients(x).iter().all(|&c| c >= 0)
    }

    /// Nonzero lattice points `Σ λ_i v_i` with every `λ_i ∈ [0, 1)`.
    fn parallelepiped(&self) -> Result<Vec<Vec<i64>>> {
        let r = self.rays.len();
        let det = i128::from(self.det);
        let mut out = Vec::new();
        let mut y = vec![0i64; r];
        loop {
            let coeffs = self.coefficients(&y);
            let mut x = vec![0i128; r];
            for (c, ray) in coeffs.iter().zip(&self.rays) {
                let f = c.rem_euclid(det);
                for (xi, &v) in x.iter_mut().zip(ray) {
                    *xi += f * i128::from(v);
                }
            }
            if x.iter().any(|&v| v != 0) {
                let point = x
                    .iter()
                    .map(|&v| {
                        debug_assert_eq!(v % det, 0);
                        i64::try_from(v / det).map_err(|_| Error::ResourceLimit {
                            what: "integer bits in Hilbert basis computation",
                            actual: 128,
                            limit: 63,
                        })
                    })
                    .collect::<Result<_>>()?;
                out.push(point);
            }
            // mixed-radix increment over the HNF box
            let mut i = 0;
            while i < r {
                y[i] += 1;
                if y[i] < self.box_sizes[i] {
                    break;
                }
                y[i] = 0;
                i += 1;
            }
            if i == r {
                break;
            }
        }
        Ok(out)
    }
}
