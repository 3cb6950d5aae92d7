//! Row-style Hermite normal form over arbitrary-precision integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn to_big(rows: &[Vec<i64>]) -> IntMatrix {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

fn sub_multiple(target: &mut [BigInt], source: &[BigInt], q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for (t, s) in target.iter_mut().zip(source) {
        *t -= q * s;
    }
}

/// Reduces `rows` in place to Hermite normal form, applying the same row
/// operations to `transform` when given. Returns the number of nonzero rows;
/// they come first, followed by zero rows.
fn reduce_in_place(rows: &mut [Vec<BigInt>], mut transform: Option<&mut [Vec<BigInt>]>) -> usize {
    let k = rows.len();
    let m = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..m {
        if r == k {
            break;
        }
        loop {
            // smallest nonzero |entry| in column c at or below row r
            let mut best: Option<usize> = None;
            for i in r..k {
                if !rows[i][c].is_zero()
                    && best.is_none_or(|b| rows[i][c].abs() < rows[b][c].abs())
                {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            rows.swap(r, b);
            if let Some(t) = transform.as_deref_mut() {
                t.swap(r, b);
            }
            let mut done = true;
            for i in r + 1..k {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[r][c]);
                let (head, tail) = rows.split_at_mut(i);
                sub_multiple(&mut tail[0], &head[r], &q);
                if let Some(t) = transform.as_deref_mut() {
                    let (th, tt) = t.split_at_mut(i);
                    sub_multiple(&mut tt[0], &th[r], &q);
                }
                if !rows[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if rows[r][c].is_zero() {
            continue;
        }
        if rows[r][c].is_negative() {
            for x in rows[r].iter_mut() {
                *x = -x.clone();
            }
            if let Some(t) = transform.as_deref_mut() {
                for x in t[r].iter_mut() {
                    *x = -x.clone();
                }
            }
        }
        for i in 0..r {
            let q = rows[i][c].div_floor(&rows[r][c]);
            let (head, tail) = rows.split_at_mut(r);
            sub_multiple(&mut head[i], &tail[0], &q);
            if let Some(t) = transform.as_deref_mut() {
                let (th, tt) = t.split_at_mut(r);
                sub_multiple(&mut th[i], &tt[0], &q);
            }
        }
        r += 1;
    }
    r
}

/// Hermite normal form of the row lattice: nonzero rows only, in echelon
/// form with positive pivots and entries above each pivot in `[0, pivot)`.
pub fn hnf(rows: &[Vec<BigInt>]) -> IntMatrix {
    let mut work = rows.to_vec();
    let rank = reduce_in_place(&mut work, None);
    work.truncate(rank);
    work
}

/// HNF of a possibly long list of rows, folding them in chunks so the
/// working matrix stays small.
pub fn hnf_incremental<I: IntoIterator<Item = Vec<BigInt>>>(rows: I, chunk: usize) -> IntMatrix {
    let mut basis: IntMatrix = Vec::new();
    let mut pending: IntMatrix = Vec::new();
    for row in rows {
        pending.push(row);
        if pending.len() >= chunk {
            basis.append(&mut pending);
            basis = hnf(&basis);
        }
    }
    basis.append(&mut pending);
    hnf(&basis)
}

/// `(H, U)` with `U · rows = H`, `U` unimodular and `H` in Hermite normal
/// form including its trailing zero rows.
pub fn hnf_with_transform(rows: &[Vec<BigInt>]) -> (IntMatrix, IntMatrix, usize) {
    let k = rows.len();
    let mut work = rows.to_vec();
    let mut transform: IntMatrix = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let rank = reduce_in_place(&mut work, Some(&mut transform));
    (work, transform, rank)
}

/// A basis of `{ y ∈ Z^k : y · rows = 0 }`.
pub fn left_kernel(rows: &[Vec<BigInt>]) -> IntMatrix {
    let (_, transform, rank) = hnf_with_transform(rows);
    transform.into_iter().skip(rank).collect()
}

/// Pivot column of each HNF row.
pub fn pivots(basis: &[Vec<BigInt>]) -> Vec<usize> {
    basis
        .iter()
        .map(|row| {
            row.iter()
                .position(|x| !x.is_zero())
                .expect("HNF rows are nonzero")
        })
        .collect()
}

/// Whether `x` is an integer combination of the rows of an HNF basis.
pub fn lattice_contains(basis: &[Vec<BigInt>], x: &[BigInt]) -> bool {
    let mut rest = x.to_vec();
    for (row, p) in basis.iter().zip(pivots(basis)) {
        let (q, r) = rest[p].div_rem(&row[p]);
        if !r.is_zero() {
            return false;
        }
        sub_multiple(&mut rest, row, &q);
    }
    rest.iter().all(Zero::is_zero)
}

/// Product of the pivots: the index of the lattice in `Z^m` when it has full
/// rank `m`.
pub fn full_rank_index(basis: &[Vec<BigInt>]) -> BigInt {
    basis
        .iter()
        .zip(pivots(basis))
        .map(|(row, p)| row[p].clone())
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> IntMatrix {
        to_big(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn identity_is_fixed() {
        let id = big(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(hnf(&id), id);
    }

    #[test]
    fn triangle_cut_lattice_has_index_two() {
        let rows = big(&[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let h = hnf(&rows);
        assert_eq!(h, big(&[&[1, 0, 1], &[0, 1, 1], &[0, 0, 2]]));
        assert_eq!(full_rank_index(&h), BigInt::from(2));
        // the textbook basis {(1,1,0),(0,1,1),(0,0,2)} spans the same lattice
        assert_eq!(hnf(&big(&[&[1, 1, 0], &[0, 1, 1], &[0, 0, 2]])), h);
    }

    #[test]
    fn zero_matrix_has_empty_basis() {
        assert!(hnf(&big(&[&[0, 0], &[0, 0]])).is_empty());
        assert!(hnf(&[]).is_empty());
    }

    #[test]
    fn transform_and_kernel() {
        let rows = big(&[&[2, 4, 6], &[1, 2, 3], &[0, 1, 1], &[1, 3, 4]]);
        let (h, u, rank) = hnf_with_transform(&rows);
        assert_eq!(rank, 2);
        for (i, urow) in u.iter().enumerate() {
            let prod: Vec<BigInt> = (0..3)
                .map(|c| urow.iter().zip(&rows).map(|(a, r)| a * &r[c]).sum())
                .collect();
            assert_eq!(prod, h[i]);
        }
        let kernel = left_kernel(&rows);
        assert_eq!(kernel.len(), 2);
        for y in &kernel {
            for c in 0..3 {
                let s: BigInt = y.iter().zip(&rows).map(|(a, r)| a * &r[c]).sum();
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn membership() {
        let h = hnf(&big(&[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]));
        let v = |x: &[i64]| x.iter().map(|&a| BigInt::from(a)).collect::<Vec<_>>();
        assert!(lattice_contains(&h, &v(&[1, 0, 1])));
        assert!(lattice_contains(&h, &v(&[2, 2, 2])));
        assert!(!lattice_contains(&h, &v(&[1, 1, 1])));
        assert!(!lattice_contains(&h, &v(&[0, 0, 1])));
    }

    #[test]
    fn incremental_matches_direct() {
        let rows: Vec<Vec<i64>> = (0..40)
            .map(|i| vec![i % 3, (i * 7) % 5, (i * i) % 4, i % 2])
            .collect();
        let big_rows = to_big(&rows);
        assert_eq!(hnf_incremental(big_rows.clone(), 7), hnf(&big_rows));
    }
}
