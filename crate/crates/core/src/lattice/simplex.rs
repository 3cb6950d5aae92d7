//! Exact phase-I simplex for feasibility of `A λ = b, λ ≥ 0`.
//!
//! Bland's least-index rule picks both the entering and the leaving
//! variable, so the method cannot cycle. The tableau first runs over
//! `i128` rationals with checked arithmetic and is re-solved over
//! arbitrary-precision rationals if any operation overflows.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, Signed, Zero};

trait Scalar: Clone + PartialOrd + Sized {
    fn from_int(x: &BigInt) -> Option<Self>;
    fn zero() -> Self;
    fn sub(&self, other: &Self) -> Option<Self>;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn div(&self, other: &Self) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn is_positive(&self) -> bool;
    fn is_negative(&self) -> bool;
}

type SmallRational = Ratio<i128>;

impl Scalar for SmallRational {
    fn from_int(x: &BigInt) -> Option<Self> {
        i128::try_from(x).ok().map(Ratio::from_integer)
    }
    fn zero() -> Self {
        Zero::zero()
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        self.checked_sub(other)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(other)
    }
    fn div(&self, other: &Self) -> Option<Self> {
        self.checked_div(other)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

impl Scalar for BigRational {
    fn from_int(x: &BigInt) -> Option<Self> {
        Some(BigRational::from_integer(x.clone()))
    }
    fn zero() -> Self {
        Zero::zero()
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn div(&self, other: &Self) -> Option<Self> {
        Some(self / other)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// Upper bound on the number of distinct bases: `C(cols, rows)`, saturating.
fn basis_count_bound(cols: usize, rows: usize) -> u128 {
    let mut acc: u128 = 1;
    for i in 0..rows.min(cols) {
        acc = acc.saturating_mul((cols - i) as u128) / (i as u128 + 1);
        if acc == u128::MAX {
            break;
        }
    }
    acc
}

/// Returns `None` on arithmetic overflow, otherwise the feasibility verdict.
fn phase_one<T: Scalar>(a: &[Vec<BigInt>], b: &[BigInt]) -> Option<bool> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let width = cols + rows + 1;
    let rhs = width - 1;
    let mut t: Vec<Vec<T>> = Vec::with_capacity(rows + 1);
    for (arow, bi) in a.iter().zip(b) {
        let flip = bi.is_negative();
        let mut row = Vec::with_capacity(width);
        for x in arow {
            let v = T::from_int(x)?;
            row.push(if flip { T::zero().sub(&v)? } else { v });
        }
        row.resize(width, T::zero());
        let bv = T::from_int(bi)?;
        row[rhs] = if flip { T::zero().sub(&bv)? } else { bv };
        t.push(row);
    }
    let one = T::from_int(&BigInt::from(1))?;
    for (i, row) in t.iter_mut().enumerate() {
        row[cols + i] = one.clone();
    }
    // objective row: reduced costs of minimizing the sum of artificials
    let mut obj = vec![T::zero(); width];
    for row in &t {
        for j in 0..cols {
            obj[j] = obj[j].sub(&row[j])?;
        }
        obj[rhs] = obj[rhs].sub(&row[rhs])?;
    }
    t.push(obj);
    let mut basis: Vec<usize> = (cols..cols + rows).collect();

    let bound = basis_count_bound(cols + rows, rows);
    let mut pivots: u128 = 0;
    while let Some(enter) = (0..cols + rows).find(|&j| t[rows][j].is_negative()) {
        let mut leave: Option<usize> = None;
        let mut best_ratio: Option<T> = None;
        for i in 0..rows {
            if !t[i][enter].is_positive() {
                continue;
            }
            let ratio = t[i][rhs].div(&t[i][enter])?;
            let better = match &best_ratio {
                None => true,
                Some(r) => ratio < *r || (ratio == *r && basis[i] < basis[leave.unwrap()]),
            };
            if better {
                best_ratio = Some(ratio);
                leave = Some(i);
            }
        }
        // phase I is bounded below by zero, so some row always qualifies
        let r = leave.expect("phase-one objective is bounded");
        let p = t[r][enter].clone();
        for x in t[r].iter_mut() {
            *x = x.div(&p)?;
        }
        let pivot_row = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i == r || row[enter].is_zero() {
                continue;
            }
            let f = row[enter].clone();
            for (x, pr) in row.iter_mut().zip(&pivot_row) {
                if !pr.is_zero() {
                    *x = x.sub(&f.mul(pr)?)?;
                }
            }
        }
        basis[r] = enter;
        pivots += 1;
        debug_assert!(
            pivots <= bound,
            "simplex exceeded the number of bases; anti-cycling failed"
        );
    }
    Some(t[rows][rhs].is_zero())
}

/// Exact feasibility of `A λ = b` with `λ ≥ 0`.
pub fn feasible(a: &[Vec<BigInt>], b: &[BigInt]) -> bool {
    assert_eq!(a.len(), b.len(), "constraint and right-hand side lengths differ");
    if let Some(verdict) = phase_one::<SmallRational>(a, b) {
        return verdict;
    }
    phase_one::<BigRational>(a, b).expect("arbitrary precision cannot overflow")
}

/// Constraint matrix with one column per generator.
fn generator_columns(generators: &[Vec<i64>], m: usize) -> Vec<Vec<BigInt>> {
    (0..m)
        .map(|e| generators.iter().map(|g| BigInt::from(g[e])).collect())
        .collect()
}

/// Whether `x / k ∈ conv(generators)`, i.e. `Σλ g = x`, `Σλ = k`, `λ ≥ 0`.
pub fn in_scaled_hull(generators: &[Vec<i64>], x: &[i64], k: u64) -> bool {
    let m = x.len();
    let mut a = generator_columns(generators, m);
    a.push(vec![BigInt::from(1); generators.len()]);
    let mut b: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
    b.push(BigInt::from(k));
    feasible(&a, &b)
}

/// Whether `x ∈ cone(generators)`.
pub fn in_cone(generators: &[Vec<i64>], x: &[i64]) -> bool {
    let a = generator_columns(generators, x.len());
    let b: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
    feasible(&a, &b)
}
