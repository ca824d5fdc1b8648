use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::BigRat;

/// Sparse rational vector: sorted `(index, nonzero value)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseVec {
    entries: Vec<(usize, BigRat)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(i: usize) -> Self {
        Self { entries: vec![(i, BigRat::one())] }
    }

    pub fn from_dense(v: &[BigRat]) -> Self {
        Self { entries: v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect() }
    }

    /// Builds from unsorted pairs, summing duplicates and dropping zeros.
    pub fn from_pairs<I: IntoIterator<Item = (usize, BigRat)>>(pairs: I) -> Self {
        let mut acc: BTreeMap<usize, BigRat> = BTreeMap::new();
        for (i, x) in pairs {
            *acc.entry(i).or_insert_with(BigRat::zero) += x;
        }
        Self { entries: acc.into_iter().filter(|(_, x)| !x.is_zero()).collect() }
    }

    pub fn to_dense(&self, dim: usize) -> Vec<BigRat> {
        let mut v = vec![BigRat::zero(); dim];
        for (i, x) in &self.entries {
            v[*i] = x.clone();
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, BigRat)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, BigRat)> {
        self.entries.iter()
    }

    pub fn get(&self, i: usize) -> Option<&BigRat> {
        self.entries.binary_search_by_key(&i, |(j, _)| *j).ok().map(|p| &self.entries[p].1)
    }

    pub fn leading(&self) -> Option<&(usize, BigRat)> {
        self.entries.first()
    }

    pub fn scale(&mut self, c: &BigRat) {
        if c.is_zero() {
            self.entries.clear();
            return;
        }
        for (_, x) in &mut self.entries {
            *x *= c;
        }
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &BigRat, other: &SparseVec) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, c * y));
                        b.next();
                    } else {
                        let s = x + c * y;
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, c * y));
                    b.next();
                }
                (None, None) => break,
            }
        }
        self.entries = out;
    }
}

/// Incrementally maintained reduced row-echelon basis of a subspace.
///
/// Every stored row has a leading 1 at its pivot and zeros at every other
/// pivot column.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    rows: BTreeMap<usize, SparseVec>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.rows.contains_key(&c)
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, &SparseVec)> {
        self.rows.iter().map(|(c, r)| (*c, r))
    }

    /// Subtracts the basis components at pivot columns. The result has zeros
    /// at every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let hits: Vec<(usize, BigRat)> = v.iter().filter(|(c, _)| self.rows.contains_key(c)).cloned().collect();
        let mut w = v.clone();
        for (c, x) in hits {
            w.axpy(&-x, &self.rows[&c]);
        }
        w
    }

    /// Adds `v` to the span. Returns true if the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let mut w = self.reduce(v);
        let Some((pivot, lead)) = w.leading().cloned() else {
            return false;
        };
        w.scale(&lead.recip());
        for row in self.rows.values_mut() {
            if let Some(x) = row.get(pivot).cloned() {
                row.axpy(&-x, &w);
            }
        }
        self.rows.insert(pivot, w);
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }
}
