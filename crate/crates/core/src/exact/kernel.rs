//! Products of nonnegative integer matrices for the power loops.
//!
//! The left factor is sparse (S = M·Mᵀ, N = Mᵀ·M of a branching matrix have
//! few nonzeros per row) and the right factor is a dense power. Entries are
//! kept in `u128` while every partial sum fits and promoted to `BigUint`
//! otherwise, so results stay exact.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use super::IntMatrix;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub(crate) struct SparseNat {
    rows: usize,
    cols: usize,
    big: Vec<Vec<(usize, BigUint)>>,
    small: Option<Vec<Vec<(usize, u64)>>>,
}

impl SparseNat {
    pub fn from_int(m: &IntMatrix) -> Result<Self> {
        let mut big = Vec::with_capacity(m.rows());
        for i in 0..m.rows() {
            let mut row = Vec::new();
            for (j, x) in m.row(i).iter().enumerate() {
                match x.sign() {
                    Sign::Minus => return Err(Error::NegativeEntry { row: i, col: j, value: x.to_string() }),
                    Sign::NoSign => {}
                    Sign::Plus => row.push((j, x.magnitude().clone())),
                }
            }
            big.push(row);
        }
        let small = big.iter().map(|row| row.iter().map(|(j, x)| x.to_u64().map(|v| (*j, v))).collect()).collect();
        Ok(Self { rows: m.rows(), cols: m.cols(), big, small })
    }
}

#[derive(Clone, Debug)]
pub(crate) enum DenseNat {
    Word { rows: usize, cols: usize, data: Vec<u128> },
    Big { rows: usize, cols: usize, data: Vec<BigUint> },
}

impl DenseNat {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0u128; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        DenseNat::Word { rows: n, cols: n, data }
    }

    pub fn from_int(m: &IntMatrix) -> Result<Self> {
        if !m.is_nonnegative() {
            let idx = m.entries().iter().position(|x| x.sign() == Sign::Minus).unwrap_or(0);
            return Err(Error::NegativeEntry {
                row: idx / m.cols().max(1),
                col: idx % m.cols().max(1),
                value: m.entries()[idx].to_string(),
            });
        }
        let words: Option<Vec<u128>> = m.entries().iter().map(|x| x.to_u128()).collect();
        Ok(match words {
            Some(data) => DenseNat::Word { rows: m.rows(), cols: m.cols(), data },
            None => DenseNat::Big {
                rows: m.rows(),
                cols: m.cols(),
                data: m.entries().iter().map(|x| x.magnitude().clone()).collect(),
            },
        })
    }

    pub fn shape(&self) -> (usize, usize) {
        match self {
            DenseNat::Word { rows, cols, .. } | DenseNat::Big { rows, cols, .. } => (*rows, *cols),
        }
    }

    #[cfg(test)]
    pub fn get(&self, i: usize, j: usize) -> BigUint {
        match self {
            DenseNat::Word { cols, data, .. } => BigUint::from(data[i * cols + j]),
            DenseNat::Big { cols, data, .. } => data[i * cols + j].clone(),
        }
    }

    pub fn to_int(&self) -> IntMatrix {
        let (rows, cols) = self.shape();
        let entries = match self {
            DenseNat::Word { data, .. } => data.iter().map(|&x| BigInt::from(x)).collect(),
            DenseNat::Big { data, .. } => data.iter().map(|x| BigInt::from(x.clone())).collect(),
        };
        IntMatrix::new(rows, cols, entries).expect("shape preserved")
    }

    fn to_big(&self) -> Vec<BigUint> {
        match self {
            DenseNat::Word { data, .. } => data.iter().map(|&x| BigUint::from(x)).collect(),
            DenseNat::Big { data, .. } => data.clone(),
        }
    }
}

fn left_mul_word(s: &[Vec<(usize, u64)>], x: &[u128], cols: usize) -> Option<Vec<u128>> {
    let rows: Option<Vec<Vec<u128>>> = s
        .par_iter()
        .map(|srow| {
            let mut acc = vec![0u128; cols];
            for &(k, c) in srow {
                let c = c as u128;
                let xrow = &x[k * cols..(k + 1) * cols];
                for (a, &v) in acc.iter_mut().zip(xrow) {
                    if v != 0 {
                        *a = a.checked_add(v.checked_mul(c)?)?;
                    }
                }
            }
            Some(acc)
        })
        .collect();
    rows.map(|r| r.concat())
}

fn left_mul_big(s: &[Vec<(usize, BigUint)>], x: &[BigUint], cols: usize) -> Vec<BigUint> {
    s.par_iter()
        .map(|srow| {
            let mut acc = vec![BigUint::zero(); cols];
            for (k, c) in srow {
                let xrow = &x[k * cols..(k + 1) * cols];
                for (a, v) in acc.iter_mut().zip(xrow) {
                    if !v.is_zero() {
                        *a += v * c;
                    }
                }
            }
            acc
        })
        .collect::<Vec<_>>()
        .concat()
}

/// Least `q` with `x <= q*y` entrywise, if one exists.
pub(crate) fn witness(x: &DenseNat, y: &DenseNat) -> Option<BigUint> {
    match (x, y) {
        (DenseNat::Word { data: a, .. }, DenseNat::Word { data: b, .. }) => {
            let mut q = 0u128;
            for (&a, &b) in a.iter().zip(b) {
                if a == 0 {
                    continue;
                }
                if b == 0 {
                    return None;
                }
                q = q.max(a.div_ceil(b));
            }
            Some(BigUint::from(q))
        }
        _ => {
            let (a, b) = (x.to_big(), y.to_big());
            let mut q = BigUint::zero();
            for (a, b) in a.iter().zip(&b) {
                if a.is_zero() {
                    continue;
                }
                if b.is_zero() {
                    return None;
                }
                let need = (a + b - 1u32) / b;
                if need > q {
                    q = need;
                }
            }
            Some(q)
        }
    }
}

/// Row-major boolean matrix packed into 64-bit words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64);
        Self { rows, cols, words, bits: vec![0; rows * words] }
    }

    fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
    }

    pub fn identity(n: usize) -> Self {
        let mut b = Self::zeros(n, n);
        for i in 0..n {
            b.set(i, i);
        }
        b
    }

    /// Nonzero pattern of a nonnegative matrix.
    pub fn support_of(m: &IntMatrix) -> Result<Self> {
        let mut b = Self::zeros(m.rows(), m.cols());
        for (idx, x) in m.entries().iter().enumerate() {
            match x.sign() {
                Sign::Minus => {
                    return Err(Error::NegativeEntry { row: idx / m.cols(), col: idx % m.cols(), value: x.to_string() })
                }
                Sign::NoSign => {}
                Sign::Plus => b.set(idx / m.cols(), idx % m.cols()),
            }
        }
        Ok(b)
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }
}

/// Column indices of the nonzero entries of each row.
#[derive(Clone, Debug)]
pub(crate) struct SparsePattern {
    cols: usize,
    rows: Vec<Vec<usize>>,
}

impl SparsePattern {
    pub fn of(m: &IntMatrix) -> Result<Self> {
        let b = BitMatrix::support_of(m)?;
        let rows = (0..m.rows()).map(|i| (0..m.cols()).filter(|&j| b.get(i, j)).collect()).collect();
        Ok(Self { cols: m.cols(), rows })
    }

    /// Support of `s * x` for nonnegative `s` with this pattern.
    pub fn left_mul(&self, x: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != x.rows {
            return Err(Error::DimensionMismatch(format!("pattern with {} columns times {} rows", self.cols, x.rows)));
        }
        let w = x.words;
        let mut out = BitMatrix::zeros(self.rows.len(), x.cols);
        if w == 0 {
            return Ok(out);
        }
        out.bits.par_chunks_mut(w).zip(&self.rows).for_each(|(acc, row)| {
            for &k in row {
                for (a, b) in acc.iter_mut().zip(&x.bits[k * w..(k + 1) * w]) {
                    *a |= b;
                }
            }
        });
        Ok(out)
    }
}

/// Exact product `s * x`.
pub(crate) fn left_mul(s: &SparseNat, x: &DenseNat) -> Result<DenseNat> {
    let (xr, cols) = x.shape();
    if s.cols != xr {
        return Err(Error::DimensionMismatch(format!("{}x{} times {}x{}", s.rows, s.cols, xr, cols)));
    }
    if let (Some(small), DenseNat::Word { data, .. }) = (&s.small, x) {
        if let Some(out) = left_mul_word(small, data, cols) {
            return Ok(DenseNat::Word { rows: s.rows, cols, data: out });
        }
    }
    let data = left_mul_big(&s.big, &x.to_big(), cols);
    Ok(DenseNat::Big { rows: s.rows, cols, data })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::mat_mul;

    #[test]
    fn matches_generic_product() {
        let s = IntMatrix::from_rows(&[[2, 1, 0], [1, 2, 1], [0, 1, 3]]).unwrap();
        let x = IntMatrix::from_rows(&[[1, 0], [4, 1], [0, 7]]).unwrap();
        let got = left_mul(&SparseNat::from_int(&s).unwrap(), &DenseNat::from_int(&x).unwrap()).unwrap();
        assert_eq!(got.to_int(), mat_mul(&s, &x).unwrap());
    }

    #[test]
    fn boolean_product_is_support_of_product() {
        let s = IntMatrix::from_rows(&[[2, 0, 1], [0, 0, 3], [1, 1, 0]]).unwrap();
        let x = IntMatrix::from_rows(&[[0, 1], [4, 0], [0, 0]]).unwrap();
        let exact = mat_mul(&s, &x).unwrap();
        let bits = SparsePattern::of(&s).unwrap().left_mul(&BitMatrix::support_of(&x).unwrap()).unwrap();
        assert_eq!(bits, BitMatrix::support_of(&exact).unwrap());
        assert!(BitMatrix::support_of(&IntMatrix::from_rows(&[[-1]]).unwrap()).is_err());
    }

    #[test]
    fn promotes_on_overflow() {
        let s = IntMatrix::from_rows(&[[1u64 << 40].map(|v| v as i64)]).unwrap();
        let mut x = DenseNat::identity(1);
        let sp = SparseNat::from_int(&s).unwrap();
        for _ in 0..4 {
            x = left_mul(&sp, &x).unwrap();
        }
        assert!(matches!(x, DenseNat::Big { .. }));
        assert_eq!(x.get(0, 0), BigUint::from(2u32).pow(160));
    }
}
