//! Exact rational linear algebra: small dense matrices and an incremental
//! sparse row-echelon basis.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::exact_poly::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn neg(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    pub fn is_scalar(&self, s: &Rational) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        v == s
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    /// Gauss-Jordan inverse; `None` if singular or not square.
    pub fn inverse(&self) -> Option<RatMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RatMatrix::identity(n);
        for c in 0..n {
            let p = (c..n).find(|&r| !a.get(r, c).is_zero())?;
            for k in 0..n {
                a.data.swap(c * n + k, p * n + k);
                inv.data.swap(c * n + k, p * n + k);
            }
            let pivot = a.get(c, c).clone();
            for k in 0..n {
                a.data[c * n + k] /= &pivot;
                inv.data[c * n + k] /= &pivot;
            }
            for r in 0..n {
                if r == c {
                    continue;
                }
                let f = a.get(r, c).clone();
                if f.is_zero() {
                    continue;
                }
                for k in 0..n {
                    let t = &f * a.get(c, k);
                    a.data[r * n + k] -= t;
                    let t = &f * inv.get(c, k);
                    inv.data[r * n + k] -= t;
                }
            }
        }
        Some(inv)
    }

    pub fn rank(&self) -> usize {
        let mut basis = SparseEchelon::new();
        for r in 0..self.rows {
            let row: SparseVec = (0..self.cols)
                .filter(|&c| !self.get(r, c).is_zero())
                .map(|c| (c, self.get(r, c).clone()))
                .collect();
            basis.insert(row);
        }
        basis.rank()
    }
}

pub type SparseVec = BTreeMap<usize, Rational>;

/// Row-echelon basis of a growing subspace. Each stored row has leading
/// coefficient 1 at its pivot column.
#[derive(Clone, Debug, Default)]
pub struct SparseEchelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl SparseEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; the result is zero iff `v` lies in the span.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        v.retain(|_, c| !c.is_zero());
        let mut cursor = 0;
        loop {
            let Some((&col, coeff)) = v.range(cursor..).next() else {
                break;
            };
            match self.rows.get(&col) {
                Some(row) => {
                    let f = coeff.clone();
                    for (c, x) in row {
                        let e = v.entry(*c).or_insert_with(Rational::zero);
                        *e -= &f * x;
                        if e.is_zero() {
                            v.remove(c);
                        }
                    }
                }
                None => cursor = col + 1,
            }
        }
        v
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the basis; returns whether it was independent.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let v = self.reduce(v);
        let Some((&pivot, lead)) = v.iter().next() else {
            return false;
        };
        let lead = lead.clone();
        let row = if lead.is_one() {
            v
        } else {
            v.into_iter().map(|(c, x)| (c, x / &lead)).collect()
        };
        self.rows.insert(pivot, row);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_poly::rat;

    fn m(rows: usize, cols: usize, v: &[i64]) -> RatMatrix {
        let mut out = RatMatrix::zeros(rows, cols);
        for (k, x) in v.iter().enumerate() {
            out.set(k / cols, k % cols, rat(*x));
        }
        out
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(3, 3, &[2, 1, 0, 1, 3, 1, 0, 1, 4]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), RatMatrix::identity(3));
        assert!(m(2, 2, &[1, 2, 2, 4]).inverse().is_none());
    }

    #[test]
    fn rank_and_membership() {
        assert_eq!(m(3, 3, &[1, 2, 3, 2, 4, 6, 0, 1, 1]).rank(), 2);
        let mut e = SparseEchelon::new();
        let v = |x: &[i64]| -> SparseVec {
            x.iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(|(i, c)| (i, rat(*c)))
                .collect()
        };
        assert!(e.insert(v(&[0, 1, 1])));
        assert!(e.insert(v(&[1, 1, 0])));
        assert!(!e.insert(v(&[1, 2, 1])));
        assert!(e.contains(v(&[2, 1, -1])));
        assert!(!e.contains(v(&[0, 0, 1])));
    }
}
