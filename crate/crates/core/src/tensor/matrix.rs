use std::fmt;

use crate::error::{Error, Result};

use super::sum::CompensatedSum;

/// Dense square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    n: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diag(&vec![1.0; n])
    }

    pub fn diag(d: &[f64]) -> Self {
        let mut m = Self::zeros(d.len());
        for (i, &x) in d.iter().enumerate() {
            m.set(i, i, x);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    row: row + 1,
                    cols: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        if let Some(i) = data.iter().position(|x| !x.is_finite()) {
            return Err(Error::NonFinite {
                tuple: vec![i / n + 1, i % n + 1],
                value: data[i],
            });
        }
        Ok(Self { n, data })
    }

    /// Permutation matrix with a one at `(i, perm[i])` (0-based).
    pub fn permutation(perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let mut m = Self::zeros(n);
        for (i, &j) in perm.iter().enumerate() {
            if j >= n {
                return Err(Error::NotPermutation);
            }
            m.set(i, j, 1.0);
        }
        if !m.is_permutation() {
            return Err(Error::NotPermutation);
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry at 0-based `(i, j)`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: x.len(),
            });
        }
        Ok((0..self.n)
            .map(|i| {
                let mut acc = CompensatedSum::default();
                for (j, xj) in x.iter().enumerate() {
                    acc.add(self.get(i, j) * xj);
                }
                acc.value()
            })
            .collect())
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        if other.n != self.n {
            return Err(Error::ShapeMismatch(2, self.n, 2, other.n));
        }
        Ok(Matrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.get(i, i)).collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.get(i, j) == 0.0))
    }

    pub fn has_positive_diagonal(&self) -> bool {
        self.is_diagonal() && self.diagonal().iter().all(|&d| d > 0.0)
    }

    pub fn has_nonnegative_diagonal(&self) -> bool {
        self.is_diagonal() && self.diagonal().iter().all(|&d| d >= 0.0)
    }

    /// 0/1 entries with exactly one 1 in every row and every column.
    pub fn is_permutation(&self) -> bool {
        if self.data.iter().any(|&x| x != 0.0 && x != 1.0) {
            return false;
        }
        let row_ok = (0..self.n).all(|i| (0..self.n).filter(|&j| self.get(i, j) == 1.0).count() == 1);
        let col_ok = (0..self.n).all(|j| (0..self.n).filter(|&i| self.get(i, j) == 1.0).count() == 1);
        row_ok && col_ok
    }

    /// Square submatrix on the given 0-based rows/columns.
    pub fn principal_submatrix(&self, idx: &[usize]) -> Vec<Vec<f64>> {
        idx.iter()
            .map(|&i| idx.iter().map(|&j| self.get(i, j)).collect())
            .collect()
    }
}

impl fmt::Display for Matrix {
    /// Rows separated by `/`, e.g. `1 -1 / 0 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| crate::io::format_number(x))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_predicates() {
        let p = Matrix::permutation(&[1, 0, 2]).unwrap();
        assert!(p.is_permutation());
        assert!(!Matrix::diag(&[1.0, 2.0]).is_permutation());
        assert!(Matrix::permutation(&[0, 0]).is_err());
        let mut q = Matrix::identity(2);
        q.set(0, 1, 1.0);
        assert!(!q.is_permutation());
    }

    #[test]
    fn diagonal_predicates() {
        let d = Matrix::diag(&[0.0, 3.0]);
        assert!(d.is_diagonal());
        assert!(d.has_nonnegative_diagonal());
        assert!(!d.has_positive_diagonal());
        let a = Matrix::from_rows(&[vec![1.0, -1.0], vec![0.0, 2.0]]).unwrap();
        assert!(!a.is_diagonal());
        assert_eq!(a.to_string(), "1 -1 / 0 2");
    }

    #[test]
    fn rejects_ragged_rows() {
        assert!(matches!(
            Matrix::from_rows(&[vec![1.0, 2.0], vec![1.0]]),
            Err(Error::NotSquare { row: 2, .. })
        ));
    }

    #[test]
    fn mul_vec_and_transpose() {
        let a = Matrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        assert_eq!(a.mul_vec(&[1.0, 1.0]).unwrap(), vec![3.0, 7.0]);
        assert_eq!(a.transpose().mul_vec(&[1.0, 0.0]).unwrap(), vec![1.0, 2.0]);
    }
}
