use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::{Error, Result};

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidMatrix(format!("{} entries for a {rows}x{cols} matrix", entries.len())));
        }
        Ok(Self { rows, cols, entries })
    }

    /// Builds a matrix from small integer rows. All rows must have equal length.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::InvalidMatrix("ragged rows".into()));
            }
            entries.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        Self::new(rows.len(), cols, entries)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
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

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|x| !x.is_negative())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Entry-wise `x <= y`.
    pub fn le(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    pub fn scale(&self, q: &BigInt) -> Self {
        Self { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|x| x * q).collect() }
    }

    /// Reorders rows and columns: entry (i, j) of the result is entry
    /// (row_perm[i], col_perm[j]) of `self`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Self {
        let mut out = Self::zeros(self.rows, self.cols);
        for (i, &pi) in row_perm.iter().enumerate() {
            for (j, &pj) in col_perm.iter().enumerate() {
                out.entries[i * self.cols + j] = self.get(pi, pj).clone();
            }
        }
        out
    }

    pub fn to_rows_i64(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|x| i64::try_from(x).ok()).collect()).collect()
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> =
            (0..self.rows).map(|i| Value::Array(self.row(i).iter().map(super::int_to_json).collect())).collect();
        json!({ "rows": self.rows, "cols": self.cols, "entries": rows })
    }

    /// Accepts the `{rows, cols, entries}` object or a bare list of rows.
    pub fn from_json(v: &Value) -> Result<Self> {
        if let Some(list) = v.as_array() {
            let cols = list.first().and_then(Value::as_array).map_or(0, Vec::len);
            return Self::from_json(&json!({ "rows": list.len(), "cols": cols, "entries": list }));
        }
        let field = |k: &str| {
            v.get(k)
                .and_then(Value::as_u64)
                .map(|x| x as usize)
                .ok_or_else(|| Error::Parse(format!("matrix field `{k}` missing")))
        };
        let rows = field("rows")?;
        let cols = field("cols")?;
        let raw = v
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("matrix field `entries` missing".into()))?;
        if raw.len() != rows {
            return Err(Error::InvalidMatrix(format!("expected {rows} rows, found {}", raw.len())));
        }
        let mut entries = Vec::with_capacity(rows * cols);
        for r in raw {
            let r = r.as_array().ok_or_else(|| Error::Parse("matrix row is not an array".into()))?;
            if r.len() != cols {
                return Err(Error::InvalidMatrix(format!("expected {cols} columns, found {}", r.len())));
            }
            for x in r {
                entries.push(super::int_from_json(x)?);
            }
        }
        Self::new(rows, cols, entries)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(ToString::to_string).collect()).collect();
        write!(f, "IntMatrix{rows:?}")
    }
}

/// Exact matrix product.
pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch(format!("{}x{} times {}x{}", a.rows, a.cols, b.rows, b.cols)));
    }
    let mut out = IntMatrix::zeros(a.rows, b.cols);
    for i in 0..a.rows {
        for k in 0..a.cols {
            let aik = a.get(i, k);
            if aik.is_zero() {
                continue;
            }
            for j in 0..b.cols {
                let bkj = b.get(k, j);
                if !bkj.is_zero() {
                    out.entries[i * b.cols + j] += aik * bkj;
                }
            }
        }
    }
    Ok(out)
}

/// Boolean mask of the nonzero entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SupportPattern {
    rows: usize,
    cols: usize,
    mask: Vec<bool>,
}

impl SupportPattern {
    pub fn from_mask(rows: usize, cols: usize, mask: Vec<bool>) -> Self {
        assert_eq!(mask.len(), rows * cols);
        Self { rows, cols, mask }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.mask[i * self.cols + j]
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn zero_count(&self) -> usize {
        self.mask.iter().filter(|b| !**b).count()
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.mask.iter().zip(&other.mask).all(|(a, b)| !*a || *b)
    }

    /// Boolean matrix product.
    pub fn bool_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch("boolean product".into()));
        }
        let mut mask = vec![false; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) {
                    for j in 0..other.cols {
                        if other.get(k, j) {
                            mask[i * other.cols + j] = true;
                        }
                    }
                }
            }
        }
        Ok(Self { rows: self.rows, cols: other.cols, mask })
    }
}

/// Support of a nonnegative matrix.
pub fn support(m: &IntMatrix) -> Result<SupportPattern> {
    let mut mask = Vec::with_capacity(m.entries.len());
    for (idx, x) in m.entries.iter().enumerate() {
        if x.is_negative() {
            return Err(Error::NegativeEntry {
                row: idx / m.cols.max(1),
                col: idx % m.cols.max(1),
                value: x.to_string(),
            });
        }
        mask.push(!x.is_zero());
    }
    Ok(SupportPattern { rows: m.rows, cols: m.cols, mask })
}

fn check_domination_args(x: &IntMatrix, y: &IntMatrix) -> Result<()> {
    if x.rows != y.rows || x.cols != y.cols {
        return Err(Error::DimensionMismatch(format!("{}x{} vs {}x{}", x.rows, x.cols, y.rows, y.cols)));
    }
    support(x)?;
    support(y)?;
    Ok(())
}

/// Least `q >= 0` with `x <= q*y` entrywise, if one exists.
pub fn domination_witness(x: &IntMatrix, y: &IntMatrix) -> Result<Option<BigInt>> {
    check_domination_args(x, y)?;
    let mut q = BigInt::zero();
    for (a, b) in x.entries.iter().zip(&y.entries) {
        if a.is_zero() {
            continue;
        }
        if b.is_zero() {
            return Ok(None);
        }
        let need = a.div_ceil(b);
        if need > q {
            q = need;
        }
    }
    Ok(Some(q))
}

/// True iff `x <= q*y` for some natural number `q`.
pub fn dominated_by(x: &IntMatrix, y: &IntMatrix) -> Result<bool> {
    Ok(domination_witness(x, y)?.is_some())
}
