//! Exact row reduction over the rationals.

use std::collections::BTreeSet;

use crate::lincomb::LinComb;
use crate::scalar::Scalar;

/// A dense matrix stored row by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: Vec<Vec<Scalar>>,
    ncols: usize,
}

impl Matrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Matrix {
            rows: vec![vec![Scalar::zero(); ncols]; nrows],
            ncols,
        }
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<Scalar>>, ncols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
        Matrix { rows, ncols }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.rows[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.rows[r][c] = v;
    }

    pub fn transpose(&self) -> Matrix {
        let rows = (0..self.ncols)
            .map(|c| self.rows.iter().map(|r| r[c].clone()).collect())
            .collect();
        Matrix::from_rows(rows, self.rows.len())
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.ncols {
            if row == self.rows.len() {
                break;
            }
            let Some(p) = (row..self.rows.len()).find(|&r| !self.rows[r][col].is_zero()) else {
                continue;
            };
            self.rows.swap(row, p);
            let inv = self.rows[row][col].recip().expect("pivot is nonzero");
            for x in self.rows[row].iter_mut() {
                *x = &*x * &inv;
            }
            let pivot_row = self.rows[row].clone();
            for (r, other) in self.rows.iter_mut().enumerate() {
                if r == row || other[col].is_zero() {
                    continue;
                }
                let factor = other[col].clone();
                for (x, p) in other.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x = &*x - &(&factor * p);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// A basis of `{x : A x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
        (0..self.ncols)
            .filter(|c| !pivot_set.contains(c))
            .map(|free| {
                let mut x = vec![Scalar::zero(); self.ncols];
                x[free] = Scalar::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    x[pc] = -m.rows[r][free].clone();
                }
                x
            })
            .collect()
    }

    pub fn mul_vec(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// Coordinates of sparse vectors over the union of their supports.
pub fn to_matrix<K: Ord + Clone>(vectors: &[LinComb<K>]) -> (Matrix, Vec<K>) {
    let keys: Vec<K> = vectors
        .iter()
        .flat_map(|v| v.keys().cloned())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let rows = vectors
        .iter()
        .map(|v| keys.iter().map(|k| v.coeff(k)).collect())
        .collect();
    (Matrix::from_rows(rows, keys.len()), keys)
}

/// Dimension of the span of sparse vectors.
pub fn span_rank<K: Ord + Clone>(vectors: &[LinComb<K>]) -> usize {
    to_matrix(vectors).0.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        let ncols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| Scalar::int(x)).collect()).collect(),
            ncols,
        )
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let ker = a.kernel();
        assert_eq!(ker.len(), 1);
        assert!(a.mul_vec(&ker[0]).iter().all(Scalar::is_zero));
    }

    #[test]
    fn full_rank_has_trivial_kernel() {
        let a = m(&[&[2, 1], &[1, 1]]);
        assert_eq!(a.rank(), 2);
        assert!(a.kernel().is_empty());
    }

    #[test]
    fn zero_matrix() {
        let a = Matrix::zeros(2, 3);
        assert_eq!(a.rank(), 0);
        assert_eq!(a.kernel().len(), 3);
    }

    #[test]
    fn sparse_rank() {
        let v1: LinComb<u8> = LinComb::from_terms([(1, Scalar::one()), (2, Scalar::int(2))]);
        let v2 = v1.scaled(&Scalar::ratio(1, 3));
        let v3 = LinComb::basis(7u8);
        assert_eq!(span_rank(&[v1, v2, v3]), 2);
    }
}
