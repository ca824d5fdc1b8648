use std::fmt;

use num_traits::{One, Zero};

use super::BigRat;
use crate::{Error, Result};

/// Dense rational matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRat>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigRat>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidMatrix(format!("{} entries for a {rows}x{cols} matrix", entries.len())));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_rows(rows: &[Vec<BigRat>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidMatrix("ragged rows".into()));
        }
        Self::new(rows.len(), cols, rows.concat())
    }

    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let rows: Vec<Vec<BigRat>> = rows.iter().map(|r| r.as_ref().iter().map(|&x| super::rat(x)).collect()).collect();
        Self::from_rows(&rows)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![BigRat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigRat::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRat {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRat) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigRat] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigRat> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigRat]) -> Result<Vec<BigRat>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch("matrix-vector product".into()));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(BigRat::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Reduced row-echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.entries.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let x = &m.entries[r * m.cols + j] * &inv;
                m.entries[r * m.cols + j] = x;
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let sub = &f * &m.entries[r * m.cols + j];
                    m.entries[i * m.cols + j] -= sub;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{x : self * x = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<BigRat>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![BigRat::zero(); self.cols];
                v[f] = BigRat::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f).clone();
                }
                v
            })
            .collect()
    }

    /// One solution of `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[BigRat]) -> Result<Option<Vec<BigRat>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch("right-hand side length".into()));
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![BigRat::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, BigRat::one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(super::rat_to_string).collect()).collect();
        write!(f, "RatMatrix{rows:?}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_frac};

    #[test]
    fn kernel_of_row_vector() {
        let m = RatMatrix::from_i64_rows(&[[1, 1]]).unwrap();
        assert_eq!(m.kernel_basis(), vec![vec![rat(-1), rat(1)]]);
    }

    #[test]
    fn rref_of_identity_is_identity() {
        let i = RatMatrix::identity(3);
        let (r, p) = i.rref();
        assert_eq!(r, i);
        assert_eq!(p, vec![0, 1, 2]);
    }

    #[test]
    fn solve_identity_returns_rhs() {
        let b = vec![rat(3), rat_frac(-1, 2)];
        assert_eq!(RatMatrix::identity(2).solve(&b).unwrap(), Some(b));
    }

    #[test]
    fn inconsistent_system_has_no_solution() {
        let m = RatMatrix::from_i64_rows(&[[1, 1], [2, 2]]).unwrap();
        assert_eq!(m.solve(&[rat(1), rat(3)]).unwrap(), None);
        let x = m.solve(&[rat(1), rat(2)]).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), vec![rat(1), rat(2)]);
    }

    #[test]
    fn inverse_round_trips() {
        let m = RatMatrix::from_i64_rows(&[[2, 1], [1, 1]]).unwrap();
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        assert!(RatMatrix::from_i64_rows(&[[1, 2], [2, 4]]).unwrap().inverse().is_none());
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = RatMatrix::from_i64_rows(&[[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 1, 0]]).unwrap();
        let k = m.kernel_basis();
        assert_eq!(k.len(), 4 - m.rank());
        for v in &k {
            assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
    }
}
