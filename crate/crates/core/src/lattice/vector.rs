use std::fmt;
use std::ops::{Add, Index, IndexMut, Sub};

use serde::{Deserialize, Serialize};

/// An integer vector indexed by edge id.
///
/// Entries are `i64`; all points handled by this crate have entries bounded by
/// a small dilation level, and the kernels that can grow numbers (Hermite
/// normal form, simplex) switch to arbitrary precision internally.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeVector(pub Vec<i64>);

impl EdgeVector {
    pub fn zeros(m: usize) -> Self {
        EdgeVector(vec![0; m])
    }

    pub fn filled(m: usize, value: i64) -> Self {
        EdgeVector(vec![value; m])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, i64> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn scaled(&self, c: i64) -> Self {
        EdgeVector(self.0.iter().map(|&x| x * c).collect())
    }

    /// Edge ids with a nonzero entry.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(e, _)| e)
            .collect()
    }

    /// Edge ids whose entry equals `value`.
    pub fn positions_of(&self, value: i64) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == value)
            .map(|(e, _)| e)
            .collect()
    }

    pub fn add_assign(&mut self, other: &EdgeVector) {
        assert_eq!(self.len(), other.len(), "edge vector length mismatch");
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += b;
        }
    }

    pub fn sum<'a, I: IntoIterator<Item = &'a EdgeVector>>(m: usize, items: I) -> EdgeVector {
        let mut acc = EdgeVector::zeros(m);
        for v in items {
            acc.add_assign(v);
        }
        acc
    }
}

impl From<Vec<i64>> for EdgeVector {
    fn from(v: Vec<i64>) -> Self {
        EdgeVector(v)
    }
}

impl Index<usize> for EdgeVector {
    type Output = i64;
    fn index(&self, e: usize) -> &i64 {
        &self.0[e]
    }
}

impl IndexMut<usize> for EdgeVector {
    fn index_mut(&mut self, e: usize) -> &mut i64 {
        &mut self.0[e]
    }
}

impl Add for &EdgeVector {
    type Output = EdgeVector;
    fn add(self, rhs: &EdgeVector) -> EdgeVector {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl Sub for &EdgeVector {
    type Output = EdgeVector;
    fn sub(self, rhs: &EdgeVector) -> EdgeVector {
        assert_eq!(self.len(), rhs.len(), "edge vector length mismatch");
        EdgeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for EdgeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// An edge vector together with the dilation level `k` it is read at.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DilatedPoint {
    #[serde(rename = "k")]
    pub level: u32,
    #[serde(rename = "x")]
    pub vector: EdgeVector,
}

impl DilatedPoint {
    pub fn new(vector: EdgeVector, level: u32) -> Self {
        DilatedPoint { vector, level }
    }

    /// `c·x` at level `c·k`.
    pub fn scaled(&self, c: u32) -> Self {
        DilatedPoint {
            vector: self.vector.scaled(c as i64),
            level: self.level * c,
        }
    }
}

impl fmt::Display for DilatedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.vector, self.level)
    }
}
